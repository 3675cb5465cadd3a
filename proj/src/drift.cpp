#include "netdrift/drift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

[[noreturn]] void dimension_fail(const char* op, std::size_t got, std::size_t want) {
    raise(Errc::dimension_mismatch, std::string(op) + ": vector length " + std::to_string(got) +
                                        " does not match " + std::to_string(want));
}

bool is_constant(std::span<const double> x) {
    for (const double value : x) {
        if (value != x.front()) return false;
    }
    return true;
}

}  // namespace

void drift_vector_into(const Graph& g, std::span<double> v) {
    const auto n = static_cast<std::int64_t>(g.node_count());
    if (std::ssize(v) != n) dimension_fail("drift_vector", v.size(), g.node_count());
#pragma omp parallel for schedule(static) if (n >= kParallelNodeCutoff)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        if (g.degree(u) == 0) {
            v[i] = 0.0;  // isolated nodes neither gain nor lose
            continue;
        }
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += 1.0 / static_cast<double>(g.degree(j));
        v[i] = acc - 1.0;
    }
}

DriftVector drift_vector(const Graph& g) {
    DriftVector v(g.node_count());
    drift_vector_into(g, v);
    return v;
}

double drift_rate(const Graph& g, const StateVector& s, double c) {
    if (s.size() != g.node_count()) dimension_fail("drift_rate", s.size(), g.node_count());
    double total = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) continue;
        double acc = 0.0;
        for (const NodeId j : g.neighbors(i)) acc += 1.0 / static_cast<double>(g.degree(j));
        total += s[i] * (acc - 1.0);
    }
    return c * total;
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) dimension_fail("pearson_correlation", a.size(), b.size());
    const std::size_t n = a.size();
    if (n < 2) return 0.0;
    // an exactly constant vector has zero variance even when its computed
    // mean carries rounding, so catch that case before the centered pass
    if (is_constant(a) || is_constant(b)) return 0.0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);
    double cov = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a <= 0.0 || var_b <= 0.0) return 0.0;
    return std::clamp(cov / (std::sqrt(var_a) * std::sqrt(var_b)), -1.0, 1.0);
}

double state_degree_correlation(const Graph& g, const StateVector& s) {
    if (s.size() != g.node_count()) {
        dimension_fail("state_degree_correlation", s.size(), g.node_count());
    }
    const DriftVector v = drift_vector(g);
    return pearson_correlation(v, s);
}

}  // namespace netdrift
