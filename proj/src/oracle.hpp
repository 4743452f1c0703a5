#pragma once

#include <cstdint>

#include "graph.hpp"
#include "rounding.hpp"

namespace surplus {

inline constexpr uint32_t kExactMaxcutCap = 24;

struct ExactMaxcut {
    uint64_t mc = 0;
    Cut witness;  // lexicographically smallest maximizer, vertex 0 on side A
};

// Exhaustive maximum cut over all 2^{n-1} bipartitions (vertex 0 pinned to
// side A), walked in Gray-code order with O(degree) incremental updates.
ExactMaxcut exact_maxcut(const Graph& g);

double exact_surplus(const Graph& g);

// Smallest adjacency eigenvalue within +-tol: power iteration on
// (shift I - A) with shift = max degree, so the shifted operator is
// positive semidefinite and its dominant eigenvalue is shift - lambda_min.
// Deterministic start vectors, restarted a few times; iteration cap 10^6.
double smallest_eigenvalue(const Graph& g, double tol);

}  // namespace surplus
