#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace surplus {

struct DegeneracyOrdering {
    std::vector<uint32_t> order;         // reverse min-degree-removal order
    std::vector<uint32_t> back_degrees;  // back_degrees[i] = neighbors of order[i] at positions < i
    uint32_t degeneracy = 0;
};

struct InducedSubgraph;

// Immutable simple undirected graph. Vertices are dense 0-based integers,
// neighbor lists sorted ascending, edge list canonical (u < v, sorted).
class Graph {
public:
    Graph() = default;

    static Graph from_edges(uint32_t n, std::span<const std::pair<uint32_t, uint32_t>> edges);

    uint32_t vertex_count() const { return n_; }
    uint64_t edge_count() const { return static_cast<uint64_t>(edges_.size()); }

    std::span<const uint32_t> neighbors(uint32_t v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    uint32_t degree(uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(uint32_t u, uint32_t v) const;

    std::span<const std::pair<uint32_t, uint32_t>> edges() const { return edges_; }

    uint32_t max_degree() const;
    uint32_t min_degree() const;
    bool is_regular() const;

    // |N(u) ∩ N(v)| by sorted-merge intersection, O(d_u + d_v)
    uint32_t codegree(uint32_t u, uint32_t v) const;

    // e(G[N(v)]) = (1/2) Σ_{j∈N(v)} codegree(v, j)
    uint64_t neighborhood_edge_count(uint32_t v) const;

    InducedSubgraph induced_subgraph(std::span<const uint32_t> s) const;

    DegeneracyOrdering degeneracy_ordering() const;
    uint32_t degeneracy() const { return degeneracy_ordering().degeneracy; }

    // Maximal vertex set whose induced subgraph has min degree >= threshold
    // (the threshold-core); empty when no such subgraph exists.
    std::vector<uint32_t> min_degree_peel(uint32_t threshold) const;

    InducedSubgraph remove_isolated() const;

    void check_vertex(uint32_t v) const;

private:
    uint32_t n_ = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges_;  // canonical u < v, sorted
    std::vector<uint32_t> offsets_;                     // size n+1
    std::vector<uint32_t> adjacency_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<uint32_t> to_original;  // new label -> original label
};

}  // namespace surplus
