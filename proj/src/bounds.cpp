#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "embedding.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "sparsity.hpp"

namespace surplus {

namespace {

void require_sparse(const Graph& g, double epsilon, double c) {
    auto check = is_sparse(g, c, epsilon);
    if (!check.sparse)
        fail(Errc::not_sparse, "graph is not sparse at the given (c, epsilon); witness vertex " +
                                   std::to_string(*check.witness));
}

std::string fmt_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

double edwards_bound(uint64_t m) {
    return (std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 8.0;
}

double embedding_lower_bound(const Graph& g, double epsilon, double c) {
    require_sparse(g, epsilon, c);
    EmbeddingParams p = EmbeddingParams::make(epsilon, c);
    if (g.vertex_count() == 0) return 0.0;
    double n = g.vertex_count();
    double degree_sum = 0.0;
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        uint32_t d = g.degree(v);
        require(d > 0, Errc::isolated_vertex,
                "vertex " + std::to_string(v) + " is isolated; strip degree-0 vertices first");
        degree_sum += pow_tau(double(d), p.tau);
    }
    double edge_sum = 0.0;
    for (auto [u, v] : g.edges())
        edge_sum += pow_tau(static_cast<double>(g.degree(u)) * g.degree(v), p.tau);
    return p.delta1 * degree_sum + p.delta2 * edge_sum / n;
}

double degeneracy_bound(const Graph& g, double epsilon, double c) {
    require_sparse(g, epsilon, c);
    if (g.edge_count() == 0) return 0.0;
    EmbeddingParams p = EmbeddingParams::make(epsilon, c);
    double d = g.degeneracy();
    return p.delta1 * static_cast<double>(g.edge_count()) / std::pow(d, 1.0 - p.tau);
}

double avg_degree_bound(const Graph& g, double epsilon, double c) {
    require_sparse(g, epsilon, c);
    if (g.vertex_count() == 0) return 0.0;
    EmbeddingParams p = EmbeddingParams::make(epsilon, c);
    double d = 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
    return p.delta2 / std::pow(4.0, 1.0 + p.tau) * std::pow(d, 1.0 + 2.0 * p.tau);
}

double eigen_upper_bound(const Graph& g, double eigen_tol) {
    require(g.vertex_count() >= 1, Errc::invalid_argument, "graph must have at least one vertex");
    require(g.is_regular(), Errc::not_regular, "eigenvalue bound requires a regular graph");
    double lambda_min = smallest_eigenvalue(g, eigen_tol);
    return -lambda_min * g.vertex_count() / 4.0;
}

AppendixSumBound appendix_sum_bound(const Graph& g, double c, double alpha, double tau) {
    require(c > 0.0, Errc::invalid_argument, "c must be positive");
    require(alpha >= 1.0 && alpha <= 2.0, Errc::invalid_argument, "alpha must lie in [1, 2]");
    require(tau > 0.0 && tau < 1.0, Errc::invalid_argument, "tau must lie in (0, 1)");

    AppendixSumBound result;
    double m = static_cast<double>(g.edge_count());
    result.t = static_cast<uint64_t>(std::floor(std::pow(m / (2.0 * c), 1.0 / alpha) + 1e-12));
    if (result.t < 1) {
        result.hypothesis_checked = true;  // the empty prefix spans no edges
        return result;
    }

    // top-t-degree prefix, ties by vertex index
    std::vector<uint32_t> verts(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) verts[v] = v;
    std::sort(verts.begin(), verts.end(), [&](uint32_t a, uint32_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    size_t take = std::min<size_t>(result.t, verts.size());
    auto prefix = g.induced_subgraph(std::span(verts.data(), take));
    double cap = c * std::pow(static_cast<double>(result.t), alpha);
    result.hypothesis_checked = static_cast<double>(prefix.graph.edge_count()) <= cap + kSparsityTol;

    double slack = m - cap;
    if (slack <= 0.0) return result;  // bound stays 0
    double big_c = 1.0 / (std::pow(1.0 - tau, 1.0 - tau) * std::pow(tau, tau));
    result.bound = big_c * std::pow(static_cast<double>(result.t), 1.0 - tau) * std::pow(slack, tau);
    return result;
}

PredictedExponents predicted_exponents(double epsilon, std::optional<double> alpha) {
    require(epsilon >= 0.0 && epsilon <= 1.0, Errc::invalid_argument,
            "epsilon must lie in [0, 1]");
    double tau = std::min(epsilon, 0.5);
    PredictedExponents out;
    out.chi3 = (1.0 + 2.0 * tau) / (2.0 + tau);
    if (alpha) {
        require(*alpha >= 0.0 && *alpha <= 1.0, Errc::invalid_argument,
                "alpha must lie in [0, 1]");
        out.chi2 = tau + (1.0 - tau) / (2.0 - *alpha);
    }
    return out;
}

const char* BoundEntry::kind_name(Kind k) {
    switch (k) {
        case Kind::lower: return "lower";
        case Kind::upper: return "upper";
        case Kind::exact: return "exact";
    }
    return "?";
}

BoundReport full_report(const Graph& g, double epsilon, double c) {
    auto stripped = g.remove_isolated();
    const Graph& h = stripped.graph;

    BoundReport report;
    report.n = h.vertex_count();
    report.m = h.edge_count();
    report.degeneracy = h.degeneracy();
    report.avg_degree = report.n == 0 ? 0.0 : 2.0 * static_cast<double>(report.m) / report.n;
    report.regular = h.is_regular();
    report.isolated_removed = g.vertex_count() - h.vertex_count();
    if (report.isolated_removed > 0)
        report.notes.push_back(std::to_string(report.isolated_removed) +
                               " isolated vertices removed before bounding");

    report.entries.push_back(
        {"edwards", BoundEntry::Kind::lower, edwards_bound(report.m), "edwards", ""});
    if (report.n > 0) {
        report.entries.push_back({"sparse_embedding", BoundEntry::Kind::lower,
                                  embedding_lower_bound(h, epsilon, c), "sparse-embedding", ""});
        report.entries.push_back({"degeneracy", BoundEntry::Kind::lower,
                                  degeneracy_bound(h, epsilon, c), "degeneracy", ""});
        report.entries.push_back({"avg_degree", BoundEntry::Kind::lower,
                                  avg_degree_bound(h, epsilon, c), "average-degree", ""});
    }
    if (report.n > 0 && report.regular) {
        report.entries.push_back(
            {"eigenvalue", BoundEntry::Kind::upper, eigen_upper_bound(h), "spectral", ""});
    } else if (report.n > 0) {
        report.notes.push_back("no eigenvalue upper bound: graph is not regular");
    }
    if (report.n >= 1 && report.n <= kExactMaxcutCap) {
        report.entries.push_back(
            {"exact_surplus", BoundEntry::Kind::exact, exact_surplus(h), "oracle", ""});
    }

    // consistency of the theory on this instance: lower <= exact <= upper
    for (const auto& lo : report.entries) {
        if (lo.kind == BoundEntry::Kind::upper) continue;
        for (const auto& hi : report.entries) {
            if (hi.kind == BoundEntry::Kind::lower || &lo == &hi) continue;
            require(lo.value <= hi.value + 1e-9, Errc::internal,
                    "bound inconsistency: " + lo.name + "=" + fmt_value(lo.value) + " exceeds " +
                        hi.name + "=" + fmt_value(hi.value));
        }
    }
    return report;
}

std::string BoundReport::to_csv() const {
    std::ostringstream out;
    out << "name,kind,value,source\n";
    for (const auto& entry : entries)
        out << entry.name << ',' << BoundEntry::kind_name(entry.kind) << ','
            << fmt_value(entry.value) << ',' << entry.source << '\n';
    return out.str();
}

std::string BoundReport::to_table() const {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "n=%u m=%llu degeneracy=%u avg_degree=%.6g regular=%s\n", n,
                  static_cast<unsigned long long>(m), degeneracy, avg_degree,
                  regular ? "yes" : "no");
    out << buf;
    out << "name              kind   value           source\n";
    for (const auto& entry : entries) {
        std::snprintf(buf, sizeof(buf), "%-17s %-6s %-15.9g %s\n", entry.name.c_str(),
                      BoundEntry::kind_name(entry.kind), entry.value, entry.source.c_str());
        out << buf;
    }
    for (const auto& note : notes) out << "note: " << note << '\n';
    return out.str();
}

}  // namespace surplus
