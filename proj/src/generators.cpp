#include "generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "error.hpp"
#include "rng.hpp"

namespace surplus {

namespace {

using EdgeVec = std::vector<std::pair<uint32_t, uint32_t>>;

void require_prime(uint32_t q) {
    require(is_prime(q), Errc::not_prime, std::to_string(q) + " is not prime");
}

// word-parallel adjacency bitsets for triangle checks
class BitAdjacency {
public:
    explicit BitAdjacency(uint32_t n) : n_(n), words_((n + 63) / 64), bits_(size_t{n} * words_) {}

    void add_edge(uint32_t u, uint32_t v) {
        bits_[size_t{u} * words_ + v / 64] |= uint64_t{1} << (v % 64);
        bits_[size_t{v} * words_ + u / 64] |= uint64_t{1} << (u % 64);
    }
    bool have_common_neighbor(uint32_t u, uint32_t v) const {
        const uint64_t* a = &bits_[size_t{u} * words_];
        const uint64_t* b = &bits_[size_t{v} * words_];
        for (uint32_t w = 0; w < words_; ++w)
            if (a[w] & b[w]) return true;
        return false;
    }

private:
    uint32_t n_;
    uint32_t words_;
    std::vector<uint64_t> bits_;
};

}  // namespace

bool is_prime(uint32_t q) {
    if (q < 2) return false;
    for (uint32_t f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

Graph complete(uint32_t n) {
    require(n >= 1, Errc::invalid_argument, "complete graph needs n >= 1");
    EdgeVec edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph cycle(uint32_t n) {
    require(n >= 3, Errc::invalid_argument, "cycle needs n >= 3");
    EdgeVec edges;
    for (uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph wheel_even(uint32_t k) {
    require(k >= 2, Errc::invalid_argument, "even wheel needs k >= 2");
    uint32_t rim = 2 * k;
    EdgeVec edges;
    for (uint32_t v = 0; v < rim; ++v) {
        edges.emplace_back(v, (v + 1) % rim);
        edges.emplace_back(v, rim);
    }
    return Graph::from_edges(rim + 1, edges);
}

Graph complete_bipartite(uint32_t s, uint32_t t) {
    require(s >= 1 && t >= 1, Errc::invalid_argument, "complete bipartite needs s, t >= 1");
    EdgeVec edges;
    for (uint32_t u = 0; u < s; ++u)
        for (uint32_t v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return Graph::from_edges(s + t, edges);
}

Graph gnp(uint32_t n, double p, uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, Errc::invalid_argument, "probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    EdgeVec edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_triangle_free(uint32_t n, uint64_t seed) {
    require(n >= 1, Errc::invalid_argument, "need n >= 1");
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    pairs.reserve(size_t{n} * (n - 1) / 2);
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    SplitMix64 rng(seed);
    for (size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.bounded(i)]);

    BitAdjacency adj(n);
    EdgeVec edges;
    for (auto [u, v] : pairs) {
        if (adj.have_common_neighbor(u, v)) continue;
        adj.add_edge(u, v);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

SrgParams srg_params(uint32_t q, uint32_t k) {
    require_prime(q);
    require(k >= 1 && k <= q + 1, Errc::invalid_argument,
            "k must lie in [1, q+1], got k=" + std::to_string(k));
    SrgParams p;
    p.q = q;
    p.k = k;
    p.n = q * q;
    p.degree = k * (q - 1);
    p.lambda_min = -static_cast<int32_t>(k);
    p.adjacent_codegree = q - 2 + (k - 1) * (k - 2);
    return p;
}

Graph dgt_srg(uint32_t q, uint32_t k) {
    SrgParams p = srg_params(q, k);

    // nonzero difference set: multiples of the first k line directions
    std::vector<std::pair<uint32_t, uint32_t>> diffs;
    for (uint32_t line = 0; line < k; ++line) {
        uint32_t dx = line < q ? 1 : 0;           // slopes 0..q-1, then vertical
        uint32_t dy = line < q ? line : 1;
        for (uint32_t t = 1; t < q; ++t) diffs.emplace_back(t * dx % q, t * dy % q);
    }

    EdgeVec edges;
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) {
            uint32_t u = a * q + b;
            for (auto [dx, dy] : diffs) {
                uint32_t v = ((a + dx) % q) * q + (b + dy) % q;
                if (u < v) edges.emplace_back(u, v);
            }
        }
    Graph g = Graph::from_edges(p.n, edges);
    require(g.edge_count() == uint64_t{p.n} * p.degree / 2, Errc::internal,
            "construction degree mismatch");
    return g;
}

Graph polarity_er(uint32_t q) {
    require_prime(q);
    // normalized projective points, first nonzero coordinate 1, in lex order
    std::vector<std::array<uint32_t, 3>> points;
    points.push_back({0, 0, 1});
    for (uint32_t c = 0; c < q; ++c) points.push_back({0, 1, c});
    for (uint32_t b = 0; b < q; ++b)
        for (uint32_t c = 0; c < q; ++c) points.push_back({1, b, c});

    uint32_t n = q * q + q + 1;
    EdgeVec edges;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            uint64_t dot = 0;
            for (int axis = 0; axis < 3; ++axis)
                dot += uint64_t{points[i][axis]} * points[j][axis];
            if (dot % q == 0) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace surplus
