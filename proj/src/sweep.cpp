#include "netdrift/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "netdrift/errors.hpp"
#include "netdrift/rng.hpp"
#include "netdrift/simulation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netdrift {
namespace {

struct CellFailure {
    bool set = false;
    Errc code = Errc::validation_error;
    std::string message;
};

}  // namespace

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t cell_index,
                              std::uint64_t replicate_index) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ cell_index);
    h = splitmix64(h ^ replicate_index);
    return h;
}

SweepResult run_sweep(const SweepSpec& spec, int max_threads) {
    validate(spec);
    const std::size_t n_p = spec.p_values.size();
    const std::size_t n_alpha = spec.alpha_values.size();
    const std::size_t replicates = spec.replicates;
    const std::size_t total = n_p * n_alpha * replicates;

    std::vector<SweepCell> cells(total);
    std::vector<CellFailure> failures(total);

    int threads = max_threads;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    threads = 1;
#endif

    // Every slot is a pure function of (spec, index), so the schedule and
    // thread count cannot change the result, only the wall time.
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t index = 0; index < static_cast<std::int64_t>(total); ++index) {
        const std::size_t replicate = static_cast<std::size_t>(index) % replicates;
        const std::size_t cell = static_cast<std::size_t>(index) / replicates;
        const std::size_t alpha_index = cell % n_alpha;
        const std::size_t p_index = cell / n_alpha;
        try {
            SimConfig config = spec.base;
            config.rewire.p = spec.p_values[p_index];
            config.rewire.alpha = spec.alpha_values[alpha_index];
            config.iterations = spec.measure_at;
            config.snapshot_every = 0;
            config.seed = derive_run_seed(spec.base.seed, cell, replicate);

            const TrajectoryRecord record = run_simulation(config);
            SweepCell& out = cells[static_cast<std::size_t>(index)];
            out.p = config.rewire.p;
            out.alpha = config.rewire.alpha;
            out.replicate = static_cast<std::uint32_t>(replicate);
            out.delta_s = record.rows.back().global_average - record.rows.front().global_average;
        } catch (const Error& e) {
            failures[static_cast<std::size_t>(index)] = {true, e.code(), e.what()};
        } catch (const std::exception& e) {
            failures[static_cast<std::size_t>(index)] = {true, Errc::validation_error, e.what()};
        }
    }

    for (std::size_t index = 0; index < total; ++index) {
        const CellFailure& failure = failures[index];
        if (!failure.set) continue;
        const std::size_t grid = index / replicates;
        raise(failure.code,
              "sweep cell (p=" + std::to_string(spec.p_values[grid / n_alpha]) +
                  ", alpha=" + std::to_string(spec.alpha_values[grid % n_alpha]) +
                  ", replicate=" + std::to_string(index % replicates) +
                  ") failed: " + failure.message);
    }

    SweepResult result;
    result.cells = std::move(cells);
    result.summaries.reserve(n_p * n_alpha);
    for (std::size_t p_index = 0; p_index < n_p; ++p_index) {
        for (std::size_t alpha_index = 0; alpha_index < n_alpha; ++alpha_index) {
            const std::size_t begin = (p_index * n_alpha + alpha_index) * replicates;
            double mean = 0.0;
            for (std::size_t r = 0; r < replicates; ++r) {
                mean += result.cells[begin + r].delta_s;
            }
            mean /= static_cast<double>(replicates);
            double squares = 0.0;
            for (std::size_t r = 0; r < replicates; ++r) {
                const double d = result.cells[begin + r].delta_s - mean;
                squares += d * d;
            }
            SweepCellSummary summary;
            summary.p = spec.p_values[p_index];
            summary.alpha = spec.alpha_values[alpha_index];
            summary.mean_delta_s = mean;
            summary.sd_delta_s =
                replicates > 1 ? std::sqrt(squares / static_cast<double>(replicates - 1)) : 0.0;
            summary.n_replicates = static_cast<std::uint32_t>(replicates);
            result.summaries.push_back(summary);
        }
    }
    return result;
}

}  // namespace netdrift
