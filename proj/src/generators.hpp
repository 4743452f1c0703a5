#pragma once

#include <cstdint>

#include "graph.hpp"

namespace surplus {

Graph complete(uint32_t n);
Graph cycle(uint32_t n);

// Apex vertex joined to every vertex of C_{2k}: n = 2k+1, m = 4k. Cycle
// vertices are 0..2k-1, the apex is 2k.
Graph wheel_even(uint32_t k);

Graph complete_bipartite(uint32_t s, uint32_t t);

// Each pair independently present with probability p; seeded, reproducible.
Graph gnp(uint32_t n, double p, uint64_t seed);

// Greedy triangle-free process: all pairs visited in seeded random order,
// an edge added iff it closes no triangle. Output is maximal triangle-free.
Graph random_triangle_free(uint32_t n, uint64_t seed);

struct SrgParams {
    uint32_t q;
    uint32_t k;
    uint32_t n;                  // q^2
    uint32_t degree;             // k(q-1)
    int32_t lambda_min;          // -k
    uint32_t adjacent_codegree;  // q-2 + (k-1)(k-2)
};
SrgParams srg_params(uint32_t q, uint32_t k);

// Strongly regular graph on GF(q)^2: the q+1 lines through the origin are
// enumerated canonically (slopes 0..q-1, then the vertical line), P is the
// first k of them, and x ~ y iff x - y is parallel to a line in P. The
// result is k(q-1)-regular. Vertex (a, b) has index a*q + b.
Graph dgt_srg(uint32_t q, uint32_t k);

// Polarity graph of the projective plane over GF(q): vertices are the
// q^2+q+1 normalized points, x ~ y iff x.y == 0 (mod q) and x != y.
// Absolute points keep their non-loop edges, so degrees are q or q+1.
// K_{2,2}-free.
Graph polarity_er(uint32_t q);

bool is_prime(uint32_t q);

}  // namespace surplus
