#include "sparsity.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.hpp"

namespace surplus {

namespace {

void check_epsilon(double epsilon) {
    require(epsilon >= 0.0 && epsilon <= 1.0, Errc::invalid_argument,
            "epsilon must lie in [0, 1]");
}

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double tau_of(double epsilon) { return std::min(epsilon, 0.5); }

}  // namespace

SparsityReport min_sparsity_constant(const Graph& g, double epsilon) {
    check_epsilon(epsilon);
    SparsityReport report;
    report.epsilon = epsilon;
    report.c_star = 0.0;
    report.witness = 0;
    report.per_vertex.reserve(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        uint32_t d = g.degree(v);
        require(d > 0, Errc::isolated_vertex,
                "vertex " + std::to_string(v) + " is isolated; strip degree-0 vertices first");
        uint64_t e = g.neighborhood_edge_count(v);
        double local_c = e == 0 ? 0.0 : static_cast<double>(e) / std::pow(double(d), 2.0 - epsilon);
        report.per_vertex.push_back({v, d, e, local_c});
        if (local_c > report.c_star) {
            report.c_star = local_c;
            report.witness = v;
        }
    }
    return report;
}

SparsityCheck is_sparse(const Graph& g, double c, double epsilon) {
    require(c > 0.0, Errc::invalid_argument, "c must be positive");
    check_epsilon(epsilon);
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        uint32_t d = g.degree(v);
        uint64_t e = d == 0 ? 0 : g.neighborhood_edge_count(v);
        double cap = c * std::pow(double(d), 2.0 - epsilon);
        if (static_cast<double>(e) > cap + kSparsityTol) return {false, v};
    }
    return {true, std::nullopt};
}

CodegreeSumCheck codegree_sum_check(const Graph& g, double c, double epsilon) {
    auto check = is_sparse(g, c, epsilon);
    if (!check.sparse)
        fail(Errc::not_sparse, "graph is not (" + fmt_real(c) + "," + fmt_real(epsilon) +
                                   ")-sparse; witness vertex " + std::to_string(*check.witness));
    double tau = tau_of(epsilon);
    double lhs = 0.0;
    for (auto [u, v] : g.edges()) {
        uint32_t dij = g.codegree(u, v);
        if (dij == 0) continue;
        double prod = static_cast<double>(g.degree(u)) * g.degree(v);
        lhs += std::pow(prod, tau - 1.0) * dij;
    }
    double degsum = 0.0;
    for (uint32_t v = 0; v < g.vertex_count(); ++v) degsum += std::pow(double(g.degree(v)), tau);
    double rhs = c * degsum;
    return {lhs, rhs, lhs <= rhs + kSparsityTol};
}

uint64_t triangle_count(const Graph& g) {
    uint64_t nbhd_twice = 0;  // Σ_v 2 e(G[N(v)]) = 6 * triangles
    uint64_t edge_sum = 0;    // Σ_{uv∈E} d_uv = 3 * triangles
    for (uint32_t v = 0; v < g.vertex_count(); ++v) nbhd_twice += 2 * g.neighborhood_edge_count(v);
    for (auto [u, v] : g.edges()) edge_sum += g.codegree(u, v);
    require(nbhd_twice == 2 * edge_sum, Errc::internal,
            "triangle count mismatch between vertex and edge iteration");
    return edge_sum / 3;
}

bool contains_kst(const Graph& g, uint32_t s, uint32_t t) {
    require(s <= 3 && t <= 4, Errc::too_large, "supported range is s <= 3, t <= 4");
    require(s >= 1 && t >= 1 && s <= t, Errc::invalid_argument, "need 1 <= s <= t");
    uint32_t n = g.vertex_count();

    auto common_at_least = [&](std::span<const uint32_t> set, uint32_t bound) {
        uint32_t count = 0;
        // candidates come from the first member's neighbor list
        for (uint32_t w : g.neighbors(set[0])) {
            bool all = true;
            for (size_t i = 1; i < set.size() && all; ++i) all = g.has_edge(set[i], w);
            if (all && ++count >= bound) return true;
        }
        return false;
    };

    if (s == 1) {
        for (uint32_t v = 0; v < n; ++v)
            if (g.degree(v) >= t) return true;
        return false;
    }
    if (s == 2) {
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v) {
                uint32_t set[2] = {u, v};
                if (common_at_least(set, t)) return true;
            }
        return false;
    }
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            for (uint32_t w = v + 1; w < n; ++w) {
                uint32_t set[3] = {u, v, w};
                if (common_at_least(set, t)) return true;
            }
    return false;
}

std::string SparsityReport::to_csv() const {
    std::ostringstream out;
    out << "vertex,degree,nbhd_edges,local_c\n";
    for (const auto& row : per_vertex)
        out << row.vertex << ',' << row.degree << ',' << row.nbhd_edges << ','
            << fmt_real(row.local_c) << '\n';
    out << "c_star," << fmt_real(c_star) << ",witness," << witness << '\n';
    return out.str();
}

std::string SparsityReport::to_table() const {
    std::ostringstream out;
    char buf[128];
    out << "vertex  degree  nbhd_edges  local_c\n";
    for (const auto& row : per_vertex) {
        std::snprintf(buf, sizeof(buf), "%-7u %-7u %-11llu %.9g\n", row.vertex, row.degree,
                      static_cast<unsigned long long>(row.nbhd_edges), row.local_c);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf), "c_star = %.9g at witness vertex %u (epsilon = %g)\n", c_star,
                  witness, epsilon);
    out << buf;
    return out.str();
}

}  // namespace surplus
