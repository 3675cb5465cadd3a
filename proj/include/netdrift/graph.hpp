#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "netdrift/rng.hpp"

namespace netdrift {

using NodeId = std::uint32_t;
using NodePair = std::pair<NodeId, NodeId>;

/// Batch of unordered node pairs, as consumed by remove_edges/add_edges.
using EdgeSample = std::vector<NodePair>;

/// Undirected simple graph on nodes 0..n-1. Edges are stored canonically as
/// (min, max). Neighbor lists are kept sorted; the edge array order reflects
/// mutation history and backs O(1) uniform edge sampling.
///
/// Concurrent reads are safe; add/remove need exclusive access (no internal
/// locking).
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n) : n_(n), adj_(n) {}

    NodeId node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::size_t max_edge_count() const noexcept {
        const std::uint64_t n = n_;
        return static_cast<std::size_t>(n * (n - 1) / 2);
    }

    NodeId degree(NodeId i) const { return static_cast<NodeId>(adj_[i].size()); }

    std::span<const NodeId> neighbors(NodeId i) const {
        return {adj_[i].data(), adj_[i].size()};
    }

    /// Canonical (u < v) pairs in mutation-history order.
    std::span<const NodePair> edges() const noexcept {
        return {edges_.data(), edges_.size()};
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// Insert {u,v}. Throws node_id_out_of_range, self_loop, or
    /// edge_already_present.
    void add_edge(NodeId u, NodeId v);

    /// Erase {u,v}. Throws node_id_out_of_range, self_loop, or edge_not_found.
    void remove_edge(NodeId u, NodeId v);

    /// Erase the edge at the given position in edges() and return it.
    /// Picking a uniform position in [0, edge_count()) yields a uniformly
    /// random edge removal.
    NodePair remove_edge_at(std::size_t index);

private:
    static std::uint64_t key(NodeId u, NodeId v) noexcept {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    void check_pair(NodeId u, NodeId v) const;
    void insert_unchecked(NodeId u, NodeId v);

    NodeId n_ = 0;
    std::vector<NodePair> edges_;
    std::unordered_map<std::uint64_t, std::uint32_t> pos_;  // key -> index in edges_
    std::vector<std::vector<NodeId>> adj_;
};

/// Validating constructor from a raw pair list. Throws self_loop,
/// duplicate_edge, or node_id_out_of_range, naming the offending pair.
Graph build_graph(NodeId n, std::span<const NodePair> edges);
Graph build_graph(NodeId n, std::initializer_list<NodePair> edges);

/// G(n, m): exactly m distinct edges drawn uniformly among all n(n-1)/2
/// pairs, by rejection sampling. Deterministic given the rng state.
/// Throws too_many_edges when m > n(n-1)/2.
Graph gen_random_graph(NodeId n, std::size_t m, Rng& rng);

/// True iff one traversal from node 0 reaches all n nodes (n <= 1 counts as
/// connected).
bool is_connected(const Graph& g);

/// y = Lx = Dx - Ax without materializing a matrix: y_i = k_i x_i - sum of
/// neighbor entries. OpenMP-parallel for large graphs; bit-identical to the
/// serial path at any thread count (per-node writes are independent).
void laplacian_apply_into(const Graph& g, std::span<const double> x,
                          std::span<double> y);
std::vector<double> laplacian_apply(const Graph& g, std::span<const double> x);

Graph remove_edges(Graph g, const EdgeSample& sample);
Graph add_edges(Graph g, const EdgeSample& sample);
void remove_edges_inplace(Graph& g, const EdgeSample& sample);
void add_edges_inplace(Graph& g, const EdgeSample& sample);

/// Node-count threshold above which the map kernels go parallel.
inline constexpr std::int64_t kParallelNodeCutoff = 4096;

}  // namespace netdrift
