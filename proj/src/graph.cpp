#include "netdrift/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "netdrift/errors.hpp"

namespace netdrift {
namespace {

std::string pair_text(NodeId u, NodeId v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void insert_sorted(std::vector<NodeId>& list, NodeId value) {
    list.insert(std::lower_bound(list.begin(), list.end(), value), value);
}

void erase_sorted(std::vector<NodeId>& list, NodeId value) {
    list.erase(std::lower_bound(list.begin(), list.end(), value));
}

}  // namespace

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_ || u == v) return false;
    return pos_.contains(key(u, v));
}

void Graph::check_pair(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) {
        raise(Errc::node_id_out_of_range,
              "node id out of range in " + pair_text(u, v) + " with n=" + std::to_string(n_));
    }
    if (u == v) {
        raise(Errc::self_loop, "self-loop " + pair_text(u, v));
    }
}

void Graph::insert_unchecked(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    pos_.emplace(key(u, v), static_cast<std::uint32_t>(edges_.size()));
    edges_.emplace_back(u, v);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

void Graph::add_edge(NodeId u, NodeId v) {
    check_pair(u, v);
    if (pos_.contains(key(u, v))) {
        raise(Errc::edge_already_present, "edge already present: " + pair_text(u, v));
    }
    insert_unchecked(u, v);
}

void Graph::remove_edge(NodeId u, NodeId v) {
    check_pair(u, v);
    const auto it = pos_.find(key(u, v));
    if (it == pos_.end()) {
        raise(Errc::edge_not_found, "edge not found: " + pair_text(u, v));
    }
    const std::uint32_t index = it->second;
    pos_.erase(it);
    // swap-remove from the edge array, updating the moved edge's index
    const NodePair last = edges_.back();
    edges_.pop_back();
    if (index < edges_.size()) {
        edges_[index] = last;
        pos_[key(last.first, last.second)] = index;
    }
    if (u > v) std::swap(u, v);
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
}

NodePair Graph::remove_edge_at(std::size_t index) {
    const NodePair e = edges_.at(index);
    remove_edge(e.first, e.second);
    return e;
}

Graph build_graph(NodeId n, std::span<const NodePair> edges) {
    if (n < 1) {
        raise(Errc::validation_error, "node count must be at least 1");
    }
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (g.has_edge(u, v)) {
            raise(Errc::duplicate_edge, "duplicate edge " + pair_text(u, v));
        }
        g.add_edge(u, v);
    }
    return g;
}

Graph build_graph(NodeId n, std::initializer_list<NodePair> edges) {
    return build_graph(n, std::span<const NodePair>(edges.begin(), edges.size()));
}

Graph gen_random_graph(NodeId n, std::size_t m, Rng& rng) {
    if (n < 1) {
        raise(Errc::validation_error, "node count must be at least 1");
    }
    Graph g(n);
    if (m > g.max_edge_count()) {
        raise(Errc::too_many_edges, "m=" + std::to_string(m) + " exceeds the n(n-1)/2 maximum " +
                                        std::to_string(g.max_edge_count()) + " for n=" +
                                        std::to_string(n));
    }
    while (g.edge_count() < m) {
        const auto u = static_cast<NodeId>(rng.uniform_index(n));
        const auto v = static_cast<NodeId>(rng.uniform_index(n));
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
    }
    return g;
}

bool is_connected(const Graph& g) {
    const NodeId n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (const NodeId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

void laplacian_apply_into(const Graph& g, std::span<const double> x, std::span<double> y) {
    const auto n = static_cast<std::int64_t>(g.node_count());
    if (std::ssize(x) != n || std::ssize(y) != n) {
        raise(Errc::dimension_mismatch,
              "laplacian_apply: vector length " + std::to_string(x.size()) +
                  " does not match node count " + std::to_string(g.node_count()));
    }
#pragma omp parallel for schedule(static) if (n >= kParallelNodeCutoff)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<NodeId>(i);
        double acc = 0.0;
        for (const NodeId j : g.neighbors(u)) acc += x[j];
        y[i] = static_cast<double>(g.degree(u)) * x[i] - acc;
    }
}

std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x) {
    std::vector<double> y(g.node_count());
    laplacian_apply_into(g, x, y);
    return y;
}

void remove_edges_inplace(Graph& g, const EdgeSample& sample) {
    for (const auto& [u, v] : sample) g.remove_edge(u, v);
}

void add_edges_inplace(Graph& g, const EdgeSample& sample) {
    for (const auto& [u, v] : sample) g.add_edge(u, v);
}

Graph remove_edges(Graph g, const EdgeSample& sample) {
    remove_edges_inplace(g, sample);
    return g;
}

Graph add_edges(Graph g, const EdgeSample& sample) {
    add_edges_inplace(g, sample);
    return g;
}

}  // namespace netdrift
