#pragma once

#include <cstdint>
#include <vector>

#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/rng.hpp"

namespace netdrift {

/// Topology update knobs. Each rewiring round removes round(p * m) edges
/// chosen uniformly and adds the same number back with both endpoints drawn
/// independently with probability proportional to max(state, eps)^alpha.
struct RewireParams {
    double p = 0.05;
    double alpha = 1.0;
    /// How many endpoint re-draws to attempt per added edge before falling
    /// back to a uniformly chosen absent pair.
    int retry_cap = 100;
};

struct NoiseParams {
    double sigma = 0.01;
    bool enabled = false;
};

/// Unnormalized sampling weights max(s_i, 1e-12)^alpha, rescaled by a
/// common positive factor so the largest magnitude stays near 1 and extreme
/// exponents cannot overflow. alpha = 0 gives uniform weights. States are
/// clamped to [1e-12, 1e300] first; if every entry is NaN the weights fall
/// back to uniform.
std::vector<double> preferential_weights(const StateVector& s, double alpha);

/// Uniformly random node pair (u, v), u != v, not currently an edge.
/// Throws GraphFull when the graph is complete.
NodePair random_absent_pair(const Graph& g, Rng& rng);

/// One rewiring round. Removes r = round(p * m) uniformly chosen edges, then
/// adds r edges with endpoints sampled by preferential_weights; a draw that
/// produces a self loop or an existing edge is retried up to retry_cap times
/// before random_absent_pair takes over. Edge count is preserved exactly.
Graph rewire_step(const Graph& g, const StateVector& s, const RewireParams& params,
                  Rng& rng);
void rewire_step_inplace(Graph& g, const StateVector& s, const RewireParams& params,
                         Rng& rng);

/// Adds independent N(0, sigma^2) perturbations to every node state.
/// No-op when disabled or sigma == 0 (the RNG is not advanced).
StateVector apply_noise(const StateVector& s, const NoiseParams& params, Rng& rng);
void apply_noise_inplace(StateVector& s, const NoiseParams& params, Rng& rng);

}  // namespace netdrift
