#include "surpluscut.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>

#include "bounds.hpp"
#include "edge_list.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rounding.hpp"
#include "sparsity.hpp"

using namespace surplus;

struct sc_graph {
    Graph graph;
};
struct sc_sparsity_report {
    SparsityReport report;
};
struct sc_embedding {
    Graph graph;  // embeddings own a copy so the handle is self-contained
    std::optional<Embedding> embedding;
};
struct sc_cut {
    Cut cut;
};
struct sc_bound_report {
    BoundReport report;
};

namespace {

thread_local std::string g_last_error;

sc_status to_status(Errc code) {
    switch (code) {
        case Errc::ok: return SC_OK;
        case Errc::invalid_argument: return SC_ERR_INVALID_ARGUMENT;
        case Errc::self_loop: return SC_ERR_SELF_LOOP;
        case Errc::duplicate_edge: return SC_ERR_DUPLICATE_EDGE;
        case Errc::vertex_out_of_range: return SC_ERR_VERTEX_OUT_OF_RANGE;
        case Errc::isolated_vertex: return SC_ERR_ISOLATED_VERTEX;
        case Errc::not_an_edge: return SC_ERR_NOT_AN_EDGE;
        case Errc::length_mismatch: return SC_ERR_LENGTH_MISMATCH;
        case Errc::not_sparse: return SC_ERR_NOT_SPARSE;
        case Errc::not_regular: return SC_ERR_NOT_REGULAR;
        case Errc::not_prime: return SC_ERR_NOT_PRIME;
        case Errc::too_large: return SC_ERR_TOO_LARGE;
        case Errc::no_convergence: return SC_ERR_NO_CONVERGENCE;
        case Errc::arcsin_domain: return SC_ERR_ARCSIN_DOMAIN;
        case Errc::parse: return SC_ERR_PARSE;
        case Errc::io: return SC_ERR_IO;
        case Errc::internal: return SC_ERR_INTERNAL;
    }
    return SC_ERR_INTERNAL;
}

template <typename Fn>
sc_status guarded(Fn&& fn) {
    try {
        fn();
        return SC_OK;
    } catch (const Error& err) {
        g_last_error = err.what();
        return to_status(err.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SC_ERR_INTERNAL;
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return SC_ERR_INTERNAL;
    }
}

sc_status string_out(const std::string& s, char** out) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) {
        g_last_error = "out of memory";
        return SC_ERR_INTERNAL;
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return SC_OK;
}

sc_status invalid(const char* msg) {
    g_last_error = msg;
    return SC_ERR_INVALID_ARGUMENT;
}

sc_params pack(const EmbeddingParams& p) {
    return {p.epsilon, p.c, p.tau, p.rho, p.delta1, p.delta2};
}

sc_trial_stats pack(const TrialStats& s) {
    return {s.min_crossing, s.max_crossing, s.mean_crossing, s.best_trial};
}

}  // namespace

extern "C" {

const char* sc_status_name(sc_status status) {
    switch (status) {
        case SC_OK: return "ok";
        case SC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SC_ERR_SELF_LOOP: return "self loop";
        case SC_ERR_DUPLICATE_EDGE: return "duplicate edge";
        case SC_ERR_VERTEX_OUT_OF_RANGE: return "vertex out of range";
        case SC_ERR_ISOLATED_VERTEX: return "isolated vertex";
        case SC_ERR_NOT_AN_EDGE: return "not an edge";
        case SC_ERR_LENGTH_MISMATCH: return "length mismatch";
        case SC_ERR_NOT_SPARSE: return "not sparse";
        case SC_ERR_NOT_REGULAR: return "not regular";
        case SC_ERR_NOT_PRIME: return "not prime";
        case SC_ERR_TOO_LARGE: return "too large";
        case SC_ERR_NO_CONVERGENCE: return "no convergence";
        case SC_ERR_ARCSIN_DOMAIN: return "arcsin domain";
        case SC_ERR_PARSE: return "parse error";
        case SC_ERR_IO: return "io error";
        case SC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* sc_last_error_message(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

/* ---------------- graphs ---------------- */

sc_status sc_graph_from_edges(uint32_t n, const uint32_t* endpoints, uint64_t m, sc_graph** out) {
    if (!out || (m > 0 && !endpoints)) return invalid("null pointer");
    return guarded([&] {
        std::vector<std::pair<uint32_t, uint32_t>> edges(m);
        for (uint64_t i = 0; i < m; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        *out = new sc_graph{Graph::from_edges(n, edges)};
    });
}

void sc_graph_free(sc_graph* g) { delete g; }

uint32_t sc_graph_vertex_count(const sc_graph* g) { return g->graph.vertex_count(); }
uint64_t sc_graph_edge_count(const sc_graph* g) { return g->graph.edge_count(); }

sc_status sc_graph_degree(const sc_graph* g, uint32_t v, uint32_t* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] {
        g->graph.check_vertex(v);
        *out = g->graph.degree(v);
    });
}

sc_status sc_graph_neighbors(const sc_graph* g, uint32_t v, const uint32_t** out, uint32_t* len) {
    if (!g || !out || !len) return invalid("null pointer");
    return guarded([&] {
        g->graph.check_vertex(v);
        auto nb = g->graph.neighbors(v);
        *out = nb.data();
        *len = static_cast<uint32_t>(nb.size());
    });
}

sc_status sc_graph_has_edge(const sc_graph* g, uint32_t u, uint32_t v, int* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = g->graph.has_edge(u, v) ? 1 : 0; });
}

sc_status sc_graph_codegree(const sc_graph* g, uint32_t u, uint32_t v, uint32_t* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = g->graph.codegree(u, v); });
}

sc_status sc_graph_neighborhood_edge_count(const sc_graph* g, uint32_t v, uint64_t* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = g->graph.neighborhood_edge_count(v); });
}

sc_status sc_graph_induced_subgraph(const sc_graph* g, const uint32_t* vertices, uint32_t k,
                                    sc_graph** out, uint32_t* mapping) {
    if (!g || !out || (k > 0 && !vertices)) return invalid("null pointer");
    return guarded([&] {
        auto induced = g->graph.induced_subgraph(std::span(vertices, k));
        if (mapping)
            std::copy(induced.to_original.begin(), induced.to_original.end(), mapping);
        *out = new sc_graph{std::move(induced.graph)};
    });
}

sc_status sc_graph_degeneracy_ordering(const sc_graph* g, uint32_t* order, uint32_t* back_degrees,
                                       uint32_t* degeneracy) {
    if (!g) return invalid("null pointer");
    return guarded([&] {
        auto result = g->graph.degeneracy_ordering();
        if (order) std::copy(result.order.begin(), result.order.end(), order);
        if (back_degrees)
            std::copy(result.back_degrees.begin(), result.back_degrees.end(), back_degrees);
        if (degeneracy) *degeneracy = result.degeneracy;
    });
}

sc_status sc_graph_min_degree_peel(const sc_graph* g, uint32_t threshold, uint32_t* out_set,
                                   uint32_t* out_len) {
    if (!g || !out_set || !out_len) return invalid("null pointer");
    return guarded([&] {
        auto core = g->graph.min_degree_peel(threshold);
        std::copy(core.begin(), core.end(), out_set);
        *out_len = static_cast<uint32_t>(core.size());
    });
}

sc_status sc_graph_remove_isolated(const sc_graph* g, sc_graph** out, uint32_t* mapping,
                                   uint32_t* out_n) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] {
        auto result = g->graph.remove_isolated();
        if (mapping) std::copy(result.to_original.begin(), result.to_original.end(), mapping);
        if (out_n) *out_n = result.graph.vertex_count();
        *out = new sc_graph{std::move(result.graph)};
    });
}

sc_status sc_graph_triangle_count(const sc_graph* g, uint64_t* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = triangle_count(g->graph); });
}

sc_status sc_graph_contains_kst(const sc_graph* g, uint32_t s, uint32_t t, int* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = contains_kst(g->graph, s, t) ? 1 : 0; });
}

sc_status sc_graph_read_file(const char* path, sc_graph** out) {
    if (!path || !out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{read_edge_list_file(path)}; });
}

sc_status sc_graph_write_file(const sc_graph* g, const char* path) {
    if (!g || !path) return invalid("null pointer");
    return guarded([&] { write_edge_list_file(path, g->graph); });
}

/* ---------------- sparsity audit ---------------- */

sc_status sc_sparsity_audit(const sc_graph* g, double epsilon, sc_sparsity_report** out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] {
        *out = new sc_sparsity_report{min_sparsity_constant(g->graph, epsilon)};
    });
}

void sc_sparsity_report_free(sc_sparsity_report* r) { delete r; }

double sc_sparsity_report_c_star(const sc_sparsity_report* r) { return r->report.c_star; }
uint32_t sc_sparsity_report_witness(const sc_sparsity_report* r) { return r->report.witness; }

sc_status sc_sparsity_report_row(const sc_sparsity_report* r, uint32_t vertex, uint32_t* degree,
                                 uint64_t* nbhd_edges, double* local_c) {
    if (!r) return invalid("null pointer");
    if (vertex >= r->report.per_vertex.size()) {
        g_last_error = "row index out of range";
        return SC_ERR_VERTEX_OUT_OF_RANGE;
    }
    const auto& row = r->report.per_vertex[vertex];
    if (degree) *degree = row.degree;
    if (nbhd_edges) *nbhd_edges = row.nbhd_edges;
    if (local_c) *local_c = row.local_c;
    return SC_OK;
}

sc_status sc_sparsity_report_csv(const sc_sparsity_report* r, char** out) {
    if (!r || !out) return invalid("null pointer");
    return string_out(r->report.to_csv(), out);
}

sc_status sc_sparsity_report_table(const sc_sparsity_report* r, char** out) {
    if (!r || !out) return invalid("null pointer");
    return string_out(r->report.to_table(), out);
}

sc_status sc_is_sparse(const sc_graph* g, double c, double epsilon, int* holds,
                       uint32_t* witness) {
    if (!g || !holds) return invalid("null pointer");
    return guarded([&] {
        auto check = is_sparse(g->graph, c, epsilon);
        *holds = check.sparse ? 1 : 0;
        if (!check.sparse && witness) *witness = *check.witness;
    });
}

sc_status sc_codegree_sum_check(const sc_graph* g, double c, double epsilon, double* lhs,
                                double* rhs, int* holds) {
    if (!g) return invalid("null pointer");
    return guarded([&] {
        auto check = codegree_sum_check(g->graph, c, epsilon);
        if (lhs) *lhs = check.lhs;
        if (rhs) *rhs = check.rhs;
        if (holds) *holds = check.holds ? 1 : 0;
    });
}

/* ---------------- embedding ---------------- */

sc_status sc_params_make(double epsilon, double c, sc_params* out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = pack(EmbeddingParams::make(epsilon, c)); });
}

sc_status sc_embedding_new(const sc_graph* g, double epsilon, double c, sc_embedding** out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] {
        auto handle = std::make_unique<sc_embedding>();
        handle->graph = g->graph;
        handle->embedding.emplace(handle->graph, EmbeddingParams::make(epsilon, c));
        *out = handle.release();
    });
}

void sc_embedding_free(sc_embedding* e) { delete e; }

sc_status sc_embedding_params(const sc_embedding* e, sc_params* out) {
    if (!e || !out) return invalid("null pointer");
    *out = pack(e->embedding->params());
    return SC_OK;
}

sc_status sc_embedding_vertex_norm(const sc_embedding* e, uint32_t v, double* out) {
    if (!e || !out) return invalid("null pointer");
    return guarded([&] { *out = e->embedding->vertex_norm(v); });
}

sc_status sc_embedding_edge_inner_product(const sc_embedding* e, uint32_t u, uint32_t v,
                                          double* out) {
    if (!e || !out) return invalid("null pointer");
    return guarded([&] { *out = e->embedding->edge_inner_product(u, v); });
}

sc_status sc_embedding_project_all(const sc_embedding* e, const double* z, uint32_t len,
                                   double* out) {
    if (!e || !z || !out) return invalid("null pointer");
    return guarded([&] {
        e->embedding->project_all(std::span(z, len), std::span(out, e->graph.vertex_count()));
    });
}

/* ---------------- rounding ---------------- */

void sc_cut_free(sc_cut* cut) { delete cut; }

uint32_t sc_cut_vertex_count(const sc_cut* cut) {
    return static_cast<uint32_t>(cut->cut.side.size());
}
uint64_t sc_cut_crossing(const sc_cut* cut) { return cut->cut.crossing; }
double sc_cut_surplus(const sc_cut* cut) { return cut->cut.surplus(); }

sc_status sc_cut_side(const sc_cut* cut, uint32_t v, int* side) {
    if (!cut || !side) return invalid("null pointer");
    if (v >= cut->cut.side.size()) {
        g_last_error = "vertex out of range";
        return SC_ERR_VERTEX_OUT_OF_RANGE;
    }
    *side = cut->cut.side[v];
    return SC_OK;
}

sc_status sc_cut_format(const sc_cut* cut, char** out) {
    if (!cut || !out) return invalid("null pointer");
    return string_out(cut_to_string(cut->cut), out);
}

sc_status sc_expected_cut_value(const sc_embedding* e, double* out) {
    if (!e || !out) return invalid("null pointer");
    return guarded([&] { *out = expected_cut_value(*e->embedding); });
}

sc_status sc_hyperplane_cut(const sc_embedding* e, uint64_t seed, sc_cut** out) {
    if (!e || !out) return invalid("null pointer");
    return guarded([&] { *out = new sc_cut{hyperplane_cut(*e->embedding, seed)}; });
}

sc_status sc_local_search_refine(const sc_graph* g, const sc_cut* cut, sc_cut** out) {
    if (!g || !cut || !out) return invalid("null pointer");
    return guarded([&] { *out = new sc_cut{local_search_refine(g->graph, cut->cut)}; });
}

sc_status sc_best_of_trials(const sc_embedding* e, uint64_t master_seed, uint32_t trials,
                            int refine, uint32_t threads, sc_cut** out, sc_trial_stats* stats) {
    if (!e || !out) return invalid("null pointer");
    return guarded([&] {
        TrialPlan plan{master_seed, trials};
        TrialStats ts;
        Cut cut = best_of_trials(*e->embedding, plan, refine != 0, &ts, threads);
        if (stats) *stats = pack(ts);
        *out = new sc_cut{std::move(cut)};
    });
}

sc_status sc_extend_cut(const sc_graph* g, const uint32_t* subset, uint32_t k,
                        const sc_cut* partial, sc_cut** out) {
    if (!g || !partial || !out || (k > 0 && !subset)) return invalid("null pointer");
    return guarded([&] {
        *out = new sc_cut{extend_cut(g->graph, std::span(subset, k), partial->cut)};
    });
}

sc_status sc_dichotomy_cut(const sc_graph* g, double epsilon, double c, double scale,
                           uint64_t master_seed, uint32_t trials, int refine, sc_cut** out,
                           sc_dichotomy_report* report) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] {
        TrialPlan plan{master_seed, trials};
        DichotomyReport rep;
        Cut cut = dichotomy_cut(g->graph, epsilon, c, scale, plan, refine != 0, &rep);
        if (report) {
            report->dense_core = rep.branch == DichotomyReport::Branch::dense_core ? 1 : 0;
            report->threshold_d = rep.threshold_d;
            report->degeneracy = rep.degeneracy;
            report->bound = rep.bound;
            report->core_size = static_cast<uint32_t>(rep.core.size());
            report->core_c_star = rep.core_c_star;
            report->stats = pack(rep.stats);
        }
        *out = new sc_cut{std::move(cut)};
    });
}

/* ---------------- bounds ---------------- */

double sc_edwards_bound(uint64_t m) { return edwards_bound(m); }

sc_status sc_embedding_lower_bound(const sc_graph* g, double epsilon, double c, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = embedding_lower_bound(g->graph, epsilon, c); });
}

sc_status sc_degeneracy_bound(const sc_graph* g, double epsilon, double c, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = degeneracy_bound(g->graph, epsilon, c); });
}

sc_status sc_avg_degree_bound(const sc_graph* g, double epsilon, double c, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = avg_degree_bound(g->graph, epsilon, c); });
}

sc_status sc_eigen_upper_bound(const sc_graph* g, double eigen_tol, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = eigen_upper_bound(g->graph, eigen_tol); });
}

sc_status sc_appendix_sum_bound(const sc_graph* g, double c, double alpha, double tau,
                                double* bound, uint64_t* t, int* hypothesis_checked) {
    if (!g) return invalid("null pointer");
    return guarded([&] {
        auto result = appendix_sum_bound(g->graph, c, alpha, tau);
        if (bound) *bound = result.bound;
        if (t) *t = result.t;
        if (hypothesis_checked) *hypothesis_checked = result.hypothesis_checked ? 1 : 0;
    });
}

sc_status sc_predicted_exponents(double epsilon, const double* alpha, double* chi3, double* chi2) {
    return guarded([&] {
        auto result =
            predicted_exponents(epsilon, alpha ? std::optional(*alpha) : std::nullopt);
        if (chi3) *chi3 = result.chi3;
        if (chi2 && result.chi2) *chi2 = *result.chi2;
    });
}

sc_status sc_full_report(const sc_graph* g, double epsilon, double c, sc_bound_report** out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = new sc_bound_report{full_report(g->graph, epsilon, c)}; });
}

void sc_bound_report_free(sc_bound_report* r) { delete r; }

uint32_t sc_bound_report_size(const sc_bound_report* r) {
    return static_cast<uint32_t>(r->report.entries.size());
}

sc_status sc_bound_report_entry(const sc_bound_report* r, uint32_t index, const char** name,
                                int* kind, double* value, const char** source) {
    if (!r) return invalid("null pointer");
    if (index >= r->report.entries.size()) {
        g_last_error = "entry index out of range";
        return SC_ERR_INVALID_ARGUMENT;
    }
    const auto& entry = r->report.entries[index];
    if (name) *name = entry.name.c_str();
    if (kind) *kind = static_cast<int>(entry.kind);
    if (value) *value = entry.value;
    if (source) *source = entry.source.c_str();
    return SC_OK;
}

sc_status sc_bound_report_csv(const sc_bound_report* r, char** out) {
    if (!r || !out) return invalid("null pointer");
    return string_out(r->report.to_csv(), out);
}

sc_status sc_bound_report_table(const sc_bound_report* r, char** out) {
    if (!r || !out) return invalid("null pointer");
    return string_out(r->report.to_table(), out);
}

/* ---------------- generators ---------------- */

sc_status sc_gen_complete(uint32_t n, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{complete(n)}; });
}

sc_status sc_gen_cycle(uint32_t n, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{cycle(n)}; });
}

sc_status sc_gen_wheel_even(uint32_t k, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{wheel_even(k)}; });
}

sc_status sc_gen_complete_bipartite(uint32_t s, uint32_t t, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{complete_bipartite(s, t)}; });
}

sc_status sc_gen_gnp(uint32_t n, double p, uint64_t seed, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{gnp(n, p, seed)}; });
}

sc_status sc_gen_random_triangle_free(uint32_t n, uint64_t seed, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{random_triangle_free(n, seed)}; });
}

sc_status sc_gen_dgt_srg(uint32_t q, uint32_t k, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{dgt_srg(q, k)}; });
}

sc_status sc_gen_polarity_er(uint32_t q, sc_graph** out) {
    if (!out) return invalid("null pointer");
    return guarded([&] { *out = new sc_graph{polarity_er(q)}; });
}

sc_status sc_srg_params_make(uint32_t q, uint32_t k, sc_srg_params* out) {
    if (!out) return invalid("null pointer");
    return guarded([&] {
        SrgParams p = srg_params(q, k);
        *out = {p.q, p.k, p.n, p.degree, p.lambda_min, p.adjacent_codegree};
    });
}

/* ---------------- oracle ---------------- */

sc_status sc_exact_maxcut(const sc_graph* g, uint64_t* mc, sc_cut** witness) {
    if (!g || !mc) return invalid("null pointer");
    return guarded([&] {
        auto result = exact_maxcut(g->graph);
        *mc = result.mc;
        if (witness) *witness = new sc_cut{std::move(result.witness)};
    });
}

sc_status sc_exact_surplus(const sc_graph* g, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = exact_surplus(g->graph); });
}

sc_status sc_smallest_eigenvalue(const sc_graph* g, double tol, double* out) {
    if (!g || !out) return invalid("null pointer");
    return guarded([&] { *out = smallest_eigenvalue(g->graph, tol); });
}

} /* extern "C" */
