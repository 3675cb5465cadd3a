#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netdrift/graph.hpp"

namespace netdrift {

/// Per-node real state, one scalar per node id.
using StateVector = std::vector<double>;

struct AggregateObservables {
    double global_sum = 0.0;           // sum of states
    double global_average = 0.0;       // global_sum / n
    double degree_weighted_sum = 0.0;  // sum of degree(i) * s[i]
};

/// Forward-Euler step of classical diffusion: s' = s - c*dt*Ls.
/// Conserves the plain state sum up to rounding on every graph.
StateVector step_classical_euler(const Graph& g, const StateVector& s, double c,
                                 double dt);

/// Discrete-time social diffusion: each node moves a fraction c toward its
/// neighborhood average; isolated nodes hold their state. Conserves the
/// degree-weighted sum on a fixed topology, but not the plain sum.
/// Requires 0 <= c <= 1, which keeps each update a convex combination.
StateVector step_social_discrete(const Graph& g, const StateVector& s, double c);

/// Unchecked kernels behind the steps above (out must not alias x).
void step_classical_euler_into(const Graph& g, std::span<const double> x,
                               double c, double dt, std::span<double> out);
void step_social_discrete_into(const Graph& g, std::span<const double> x,
                               double c, std::span<double> out);

AggregateObservables aggregates(const Graph& g, const StateVector& s);

struct SocialTrajectory {
    std::vector<AggregateObservables> aggregates;  // one entry per state, incl. the initial one
    StateVector final_state;
};

/// Repeated social-diffusion steps on a fixed topology.
SocialTrajectory integrate_social(const Graph& g, const StateVector& s0, double c,
                                  std::uint64_t steps);

}  // namespace netdrift
