#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netdrift/config.hpp"
#include "netdrift/dynamics.hpp"
#include "netdrift/graph.hpp"
#include "netdrift/rng.hpp"

namespace netdrift {

struct TrajectoryRow {
    std::uint64_t iteration = 0;
    double global_average = 0.0;
    double global_sum = 0.0;
    double degree_weighted_sum = 0.0;
    /// Drift rate c * (v dot s) evaluated immediately before the next diffusion
    /// step, i.e. on the exact topology and state that step will use. With
    /// noise off, global_sum of the next row minus this row equals this value.
    /// The last row has no next step; there it is evaluated on the final state.
    double predicted_drift_rate = 0.0;
    /// state_degree_correlation of this row's graph and state.
    double correlation = 0.0;
};

struct TrajectoryRecord {
    std::vector<TrajectoryRow> rows;  // iterations 0..T inclusive
    StateVector final_state;
    SimConfig config;
};

/// Called whenever a snapshot falls due (iteration 0 and every
/// snapshot_every-th iteration when snapshot_every > 0).
using SnapshotSink =
    std::function<void(std::uint64_t iteration, const Graph& g, const StateVector& s)>;

StateVector make_initial_state(std::uint32_t n, const InitStateSpec& init, Rng& rng);

/// Full adaptive run: generate graph and initial state from the rng, then
/// per iteration apply the three operations in config.op_order. All
/// randomness comes from the one rng, so identical (config, seed) pairs give
/// bit-identical records.
TrajectoryRecord run_simulation(const SimConfig& config, Rng& rng,
                                const SnapshotSink& sink = {});

/// Convenience overload seeding the rng from config.seed.
TrajectoryRecord run_simulation(const SimConfig& config, const SnapshotSink& sink = {});

}  // namespace netdrift
