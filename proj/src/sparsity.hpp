#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace surplus {

// Absolute tolerance for the sparsity and codegree-sum inequalities; all
// compared quantities are O(m), far above rounding noise at desk scale.
inline constexpr double kSparsityTol = 1e-9;

struct SparsityRow {
    uint32_t vertex;
    uint32_t degree;
    uint64_t nbhd_edges;
    double local_c;  // e(G[N(v)]) / d_v^{2-eps}; 0 when the neighborhood spans no edges
};

struct SparsityReport {
    double epsilon;
    std::vector<SparsityRow> per_vertex;
    double c_star;     // least c making the graph (c, eps)-sparse
    uint32_t witness;  // argmax vertex, lowest index on ties

    std::string to_csv() const;
    std::string to_table() const;
};

// Least sparsity constant audit. Degree-0 vertices are disallowed; strip
// them with remove_isolated first.
SparsityReport min_sparsity_constant(const Graph& g, double epsilon);

struct SparsityCheck {
    bool sparse;
    std::optional<uint32_t> witness;  // a violating vertex when !sparse
};
SparsityCheck is_sparse(const Graph& g, double c, double epsilon);

struct CodegreeSumCheck {
    double lhs;  // Σ_{ij∈E} (d_i d_j)^{τ-1} d_ij
    double rhs;  // c Σ_i d_i^τ
    bool holds;
};
// Requires the graph to pass is_sparse(g, c, epsilon).
CodegreeSumCheck codegree_sum_check(const Graph& g, double c, double epsilon);

uint64_t triangle_count(const Graph& g);

// True iff some s-set of vertices has >= t common neighbors (a K_{s,t}
// subgraph). Brute force over s-subsets; supported range s <= 3, t <= 4.
bool contains_kst(const Graph& g, uint32_t s, uint32_t t);

}  // namespace surplus
