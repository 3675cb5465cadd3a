#include "netdrift/dynamics.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

void check_state(const Graph& g, std::span<const double> s, const char* op) {
    if (s.size() != g.node_count()) {
        raise(Errc::dimension_mismatch,
              std::string(op) + ": state length " + std::to_string(s.size()) +
                  " does not match node count " + std::to_string(g.node_count()));
    }
    for (const double value : s) {
        if (!std::isfinite(value)) {
            raise(Errc::non_finite_state, std::string(op) + ": state contains a non-finite entry");
        }
    }
}

}  // namespace

void step_classical_euler_into(const Graph& g, std::span<const double> x, double c, double dt,
                               std::span<double> out) {
    const auto n = static_cast<std::int64_t>(g.node_count());
    const double step = c * dt;
#pragma omp parallel for schedule(static) if (n >= kParallelNodeCutoff)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += x[j];
        out[i] = x[i] - step * (static_cast<double>(g.degree(u)) * x[i] - acc);
    }
}

void step_social_discrete_into(const Graph& g, std::span<const double> x, double c,
                               std::span<double> out) {
    const auto n = static_cast<std::int64_t>(g.node_count());
#pragma omp parallel for schedule(static) if (n >= kParallelNodeCutoff)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        const NodeId k = g.degree(u);
        if (k == 0) {
            out[i] = x[i];  // nobody to assimilate toward
            continue;
        }
        // accumulating deviations instead of raw states keeps any constant
        // vector an exact fixed point: every term is exactly zero
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += x[j] - x[i];
        out[i] = x[i] + c * (acc / static_cast<double>(k));
    }
}

StateVector step_classical_euler(const Graph& g, const StateVector& s, double c, double dt) {
    check_state(g, s, "step_classical_euler");
    if (!(c >= 0.0)) {
        raise(Errc::validation_error, "step_classical_euler: c must be >= 0");
    }
    if (!(dt > 0.0)) {
        raise(Errc::validation_error, "step_classical_euler: dt must be > 0");
    }
    StateVector out(s.size());
    step_classical_euler_into(g, s, c, dt, out);
    return out;
}

StateVector step_social_discrete(const Graph& g, const StateVector& s, double c) {
    check_state(g, s, "step_social_discrete");
    if (!(c >= 0.0 && c <= 1.0)) {
        raise(Errc::validation_error, "step_social_discrete: c must be in [0, 1]");
    }
    StateVector out(s.size());
    step_social_discrete_into(g, s, c, out);
    return out;
}

AggregateObservables aggregates(const Graph& g, const StateVector& s) {
    if (s.size() != g.node_count()) {
        raise(Errc::dimension_mismatch,
              "aggregates: state length " + std::to_string(s.size()) +
                  " does not match node count " + std::to_string(g.node_count()));
    }
    double sum = 0.0;
    double weighted = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        sum += s[i];
        weighted += static_cast<double>(g.degree(i)) * s[i];
    }
    AggregateObservables agg;
    agg.global_sum = sum;
    agg.global_average = sum / static_cast<double>(g.node_count());
    agg.degree_weighted_sum = weighted;
    return agg;
}

SocialTrajectory integrate_social(const Graph& g, const StateVector& s0, double c,
                                  std::uint64_t steps) {
    check_state(g, s0, "integrate_social");
    if (!(c >= 0.0 && c <= 1.0)) {
        raise(Errc::validation_error, "integrate_social: c must be in [0, 1]");
    }
    SocialTrajectory trajectory;
    trajectory.aggregates.reserve(steps + 1);
    StateVector current = s0;
    StateVector next(current.size());
    trajectory.aggregates.push_back(aggregates(g, current));
    for (std::uint64_t t = 0; t < steps; ++t) {
        step_social_discrete_into(g, current, c, next);
        current.swap(next);
        trajectory.aggregates.push_back(aggregates(g, current));
    }
    trajectory.final_state = std::move(current);
    return trajectory;
}

}  // namespace netdrift
