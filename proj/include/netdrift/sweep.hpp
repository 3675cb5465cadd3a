#pragma once

#include <cstdint>
#include <vector>

#include "netdrift/config.hpp"

namespace netdrift {

struct SweepCell {
    double p = 0.0;
    double alpha = 0.0;
    std::uint32_t replicate = 0;
    /// global_average at iteration measure_at minus global_average at 0.
    double delta_s = 0.0;
};

struct SweepCellSummary {
    double p = 0.0;
    double alpha = 0.0;
    double mean_delta_s = 0.0;
    /// Sample standard deviation over replicates (0 for a single replicate).
    double sd_delta_s = 0.0;
    std::uint32_t n_replicates = 0;
};

struct SweepResult {
    /// One entry per (p, alpha, replicate), ordered p-major, then alpha, then
    /// replicate, independent of execution schedule.
    std::vector<SweepCell> cells;
    std::vector<SweepCellSummary> summaries;
};

/// Stable per-run seed: a splitmix64 chain over (master, cell, replicate).
/// Same triple always gives the same seed; distinct triples collide only at
/// the birthday bound of a 64-bit hash.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t cell_index,
                              std::uint64_t replicate_index);

/// Run every (p, alpha, replicate) combination of the grid. Each run copies
/// spec.base, overrides rewire.p and rewire.alpha from the grid, runs for
/// spec.measure_at iterations with a seed derived from base.seed, and records
/// delta_s. Runs may execute concurrently (max_threads = 0 picks the OpenMP
/// default, 1 forces serial); results are identical either way. A failing
/// run aborts the sweep with the cell identified in the error message.
SweepResult run_sweep(const SweepSpec& spec, int max_threads = 0);

}  // namespace netdrift
