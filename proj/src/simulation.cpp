#include "netdrift/simulation.hpp"

#include <array>
#include <utility>

#include "netdrift/adaptive.hpp"
#include "netdrift/drift.hpp"

namespace netdrift {
namespace {

enum class Op { diffuse, rewire, noise };

std::array<Op, 3> ops_for(OpOrder order) {
    switch (order) {
        case OpOrder::diffuse_rewire_noise: return {Op::diffuse, Op::rewire, Op::noise};
        case OpOrder::diffuse_noise_rewire: return {Op::diffuse, Op::noise, Op::rewire};
        case OpOrder::rewire_diffuse_noise: return {Op::rewire, Op::diffuse, Op::noise};
        case OpOrder::rewire_noise_diffuse: return {Op::rewire, Op::noise, Op::diffuse};
        case OpOrder::noise_diffuse_rewire: return {Op::noise, Op::diffuse, Op::rewire};
        case OpOrder::noise_rewire_diffuse: return {Op::noise, Op::rewire, Op::diffuse};
    }
    return {Op::diffuse, Op::rewire, Op::noise};
}

}  // namespace

StateVector make_initial_state(std::uint32_t n, const InitStateSpec& init, Rng& rng) {
    StateVector s(n);
    for (double& value : s) value = rng.uniform(init.low, init.high);
    return s;
}

TrajectoryRecord run_simulation(const SimConfig& config, Rng& rng, const SnapshotSink& sink) {
    validate(config);
    Graph g = gen_random_graph(config.n, config.m, rng);
    StateVector s = make_initial_state(config.n, config.init_state, rng);
    StateVector scratch(s.size());
    const std::array<Op, 3> ops = ops_for(config.op_order);

    TrajectoryRecord record;
    record.config = config;
    record.rows.reserve(config.iterations + 1);

    const auto emit_row = [&](std::uint64_t iteration) {
        const AggregateObservables agg = aggregates(g, s);
        TrajectoryRow row;
        row.iteration = iteration;
        row.global_average = agg.global_average;
        row.global_sum = agg.global_sum;
        row.degree_weighted_sum = agg.degree_weighted_sum;
        // provisional; the next diffusion step overwrites it with the rate
        // on the exact topology and state it acts on (same values unless a
        // rewire or noise op runs first under a non-default op_order)
        row.predicted_drift_rate = drift_rate(g, s, config.c);
        row.correlation = state_degree_correlation(g, s);
        record.rows.push_back(row);
        if (sink && config.snapshot_every > 0 && iteration % config.snapshot_every == 0) {
            sink(iteration, g, s);
        }
    };

    emit_row(0);

    for (std::uint64_t t = 1; t <= config.iterations; ++t) {
        for (const Op op : ops) {
            switch (op) {
                case Op::diffuse:
                    record.rows.back().predicted_drift_rate = drift_rate(g, s, config.c);
                    step_social_discrete_into(g, s, config.c, scratch);
                    s.swap(scratch);
                    break;
                case Op::rewire:
                    rewire_step_inplace(g, s, config.rewire, rng);
                    break;
                case Op::noise:
                    apply_noise_inplace(s, config.noise, rng);
                    break;
            }
        }
        emit_row(t);
    }

    record.final_state = std::move(s);
    return record;
}

TrajectoryRecord run_simulation(const SimConfig& config, const SnapshotSink& sink) {
    Rng rng(config.seed);
    return run_simulation(config, rng, sink);
}

}  // namespace netdrift
