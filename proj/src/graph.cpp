#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "error.hpp"

namespace surplus {

void Graph::check_vertex(uint32_t v) const {
    require(v < n_, Errc::vertex_out_of_range,
            "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

Graph Graph::from_edges(uint32_t n, std::span<const std::pair<uint32_t, uint32_t>> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        require(u < n && v < n, Errc::vertex_out_of_range,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range [0, " +
                    std::to_string(n) + ")");
        require(u != v, Errc::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        fail(Errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                       std::to_string(dup->second) + ")");

    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (uint32_t v = 0; v < n; ++v)
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

uint32_t Graph::max_degree() const {
    uint32_t d = 0;
    for (uint32_t v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

uint32_t Graph::min_degree() const {
    if (n_ == 0) return 0;
    uint32_t d = degree(0);
    for (uint32_t v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::is_regular() const { return n_ == 0 || max_degree() == min_degree(); }

uint32_t Graph::codegree(uint32_t u, uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    require(u != v, Errc::invalid_argument, "codegree requires distinct vertices");
    auto a = neighbors(u);
    auto b = neighbors(v);
    uint32_t count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

uint64_t Graph::neighborhood_edge_count(uint32_t v) const {
    check_vertex(v);
    uint64_t twice = 0;
    for (uint32_t j : neighbors(v)) twice += codegree(v, j);
    return twice / 2;
}

InducedSubgraph Graph::induced_subgraph(std::span<const uint32_t> s) const {
    std::vector<uint32_t> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (uint32_t v : verts) check_vertex(v);

    std::vector<uint32_t> to_new(n_, UINT32_MAX);
    for (uint32_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = i;

    std::vector<std::pair<uint32_t, uint32_t>> sub_edges;
    for (uint32_t v : verts)
        for (uint32_t w : neighbors(v))
            if (v < w && to_new[w] != UINT32_MAX) sub_edges.emplace_back(to_new[v], to_new[w]);

    InducedSubgraph out;
    out.graph = from_edges(static_cast<uint32_t>(verts.size()), sub_edges);
    out.to_original = std::move(verts);
    return out;
}

DegeneracyOrdering Graph::degeneracy_ordering() const {
    // Bucket-queue peeling, O(n + m). Removal order reversed so that each
    // vertex's earlier-neighbor count equals its degree at removal time.
    DegeneracyOrdering result;
    result.order.resize(n_);
    result.back_degrees.assign(n_, 0);
    if (n_ == 0) return result;

    std::vector<uint32_t> deg(n_);
    uint32_t maxdeg = 0;
    for (uint32_t v = 0; v < n_; ++v) {
        deg[v] = degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<uint32_t> bucket_start(maxdeg + 2, 0);
    for (uint32_t v = 0; v < n_; ++v) ++bucket_start[deg[v] + 1];
    std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
    std::vector<uint32_t> vert(n_), pos(n_);
    {
        std::vector<uint32_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (uint32_t v = 0; v < n_; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    uint32_t degeneracy = 0;
    std::vector<uint32_t> removal(n_);
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t v = vert[i];
        removal[i] = v;
        degeneracy = std::max(degeneracy, deg[v]);
        for (uint32_t w : neighbors(v)) {
            if (deg[w] > deg[v]) {
                // swap w to the front of its bucket, then shrink its degree;
                // w lands at the end of bucket deg[w]-1
                uint32_t dw = deg[w];
                uint32_t pw = pos[w];
                uint32_t pfront = bucket_start[dw];
                uint32_t front_vert = vert[pfront];
                std::swap(vert[pw], vert[pfront]);
                pos[front_vert] = pw;
                pos[w] = pfront;
                ++bucket_start[dw];
                --deg[w];
            }
        }
    }

    for (uint32_t i = 0; i < n_; ++i) result.order[i] = removal[n_ - 1 - i];
    std::vector<uint32_t> position(n_);
    for (uint32_t i = 0; i < n_; ++i) position[result.order[i]] = i;
    for (uint32_t i = 0; i < n_; ++i) {
        uint32_t v = result.order[i];
        uint32_t back = 0;
        for (uint32_t w : neighbors(v))
            if (position[w] < i) ++back;
        result.back_degrees[i] = back;
    }
    result.degeneracy = degeneracy;
    return result;
}

std::vector<uint32_t> Graph::min_degree_peel(uint32_t threshold) const {
    std::vector<uint32_t> deg(n_);
    std::vector<char> removed(n_, 0);
    std::vector<uint32_t> queue;
    for (uint32_t v = 0; v < n_; ++v) {
        deg[v] = degree(v);
        if (deg[v] < threshold) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        uint32_t v = queue.back();
        queue.pop_back();
        for (uint32_t w : neighbors(v)) {
            if (!removed[w] && --deg[w] < threshold) {
                removed[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<uint32_t> kept;
    for (uint32_t v = 0; v < n_; ++v)
        if (!removed[v]) kept.push_back(v);
    return kept;
}

InducedSubgraph Graph::remove_isolated() const {
    std::vector<uint32_t> kept;
    for (uint32_t v = 0; v < n_; ++v)
        if (degree(v) > 0) kept.push_back(v);
    return induced_subgraph(kept);
}

}  // namespace surplus
