#include "netdrift/kernels_ref.hpp"

// Each body mirrors the arithmetic of its OpenMP counterpart expression for
// expression; the benchmark and the equivalence tests rely on the outputs
// matching bit for bit.
namespace netdrift::ref {

void laplacian_apply_into(const Graph& g, std::span<const double> x, std::span<double> y) {
    const NodeId n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += x[j];
        y[u] = static_cast<double>(g.degree(u)) * x[u] - acc;
    }
}

void step_classical_euler_into(const Graph& g, std::span<const double> s, double c, double dt,
                               std::span<double> out) {
    const NodeId n = g.node_count();
    const double step = c * dt;
    for (NodeId u = 0; u < n; ++u) {
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += s[j];
        out[u] = s[u] - step * (static_cast<double>(g.degree(u)) * s[u] - acc);
    }
}

void step_social_discrete_into(const Graph& g, std::span<const double> s, double c,
                               std::span<double> out) {
    const NodeId n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        const NodeId k = g.degree(u);
        if (k == 0) {
            out[u] = s[u];
            continue;
        }
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += s[j] - s[u];
        out[u] = s[u] + c * (acc / static_cast<double>(k));
    }
}

void drift_vector_into(const Graph& g, std::span<double> v) {
    const NodeId n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        if (g.degree(u) == 0) {
            v[u] = 0.0;
            continue;
        }
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += 1.0 / static_cast<double>(g.degree(j));
        v[u] = acc - 1.0;
    }
}

}  // namespace netdrift::ref
