#pragma once

#include <span>

#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"

// Plain serial versions of the per-node kernels. The main library routes
// large graphs through OpenMP loops; these stay single threaded so tests and
// the benchmark can compare the two implementations output for output.
namespace netdrift::ref {

void laplacian_apply_into(const Graph& g, std::span<const double> x,
                          std::span<double> y);

void step_classical_euler_into(const Graph& g, std::span<const double> s,
                               double c, double dt, std::span<double> out);

void step_social_discrete_into(const Graph& g, std::span<const double> s,
                               double c, std::span<double> out);

void drift_vector_into(const Graph& g, std::span<double> v);

}  // namespace netdrift::ref
