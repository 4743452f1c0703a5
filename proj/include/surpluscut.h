/* surpluscut — cuts beating m/2 in graphs with sparse neighborhoods.
 *
 * C API over the C++ core: opaque handles, status-code returns, outputs
 * through pointers. Handles are created by sc_* constructors and released
 * with the matching sc_*_free. All functions are safe to call from several
 * threads as long as each handle is only mutated by one of them; graphs,
 * embeddings and reports are immutable after construction.
 */
#ifndef SURPLUSCUT_H
#define SURPLUSCUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SURPLUSCUT_BUILD)
#    define SC_API __declspec(dllexport)
#  else
#    define SC_API __declspec(dllimport)
#  endif
#else
#  define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERR_INVALID_ARGUMENT,
    SC_ERR_SELF_LOOP,
    SC_ERR_DUPLICATE_EDGE,
    SC_ERR_VERTEX_OUT_OF_RANGE,
    SC_ERR_ISOLATED_VERTEX,
    SC_ERR_NOT_AN_EDGE,
    SC_ERR_LENGTH_MISMATCH,
    SC_ERR_NOT_SPARSE,
    SC_ERR_NOT_REGULAR,
    SC_ERR_NOT_PRIME,
    SC_ERR_TOO_LARGE,
    SC_ERR_NO_CONVERGENCE,
    SC_ERR_ARCSIN_DOMAIN,
    SC_ERR_PARSE,
    SC_ERR_IO,
    SC_ERR_INTERNAL
} sc_status;

SC_API const char* sc_status_name(sc_status status);

/* Detail for the most recent failure on the calling thread; the pointer
 * stays valid until the next failing call on that thread. */
SC_API const char* sc_last_error_message(void);

/* Strings returned through char** outputs are heap-allocated; release them
 * here. */
SC_API void sc_string_free(char* s);

/* ---------------- graphs ---------------- */

typedef struct sc_graph sc_graph;

/* endpoints holds m pairs (u0,v0,u1,v1,...); loops and duplicates are
 * rejected. */
SC_API sc_status sc_graph_from_edges(uint32_t n, const uint32_t* endpoints, uint64_t m,
                                     sc_graph** out);
SC_API void sc_graph_free(sc_graph* g);

SC_API uint32_t sc_graph_vertex_count(const sc_graph* g);
SC_API uint64_t sc_graph_edge_count(const sc_graph* g);
SC_API sc_status sc_graph_degree(const sc_graph* g, uint32_t v, uint32_t* out);
/* Sorted neighbor list; the span stays valid for the handle's lifetime. */
SC_API sc_status sc_graph_neighbors(const sc_graph* g, uint32_t v, const uint32_t** out,
                                    uint32_t* len);
SC_API sc_status sc_graph_has_edge(const sc_graph* g, uint32_t u, uint32_t v, int* out);
SC_API sc_status sc_graph_codegree(const sc_graph* g, uint32_t u, uint32_t v, uint32_t* out);
SC_API sc_status sc_graph_neighborhood_edge_count(const sc_graph* g, uint32_t v, uint64_t* out);

/* mapping (optional, length k) receives original labels of the new
 * vertices. */
SC_API sc_status sc_graph_induced_subgraph(const sc_graph* g, const uint32_t* vertices, uint32_t k,
                                           sc_graph** out, uint32_t* mapping);
/* order and back_degrees have length n. */
SC_API sc_status sc_graph_degeneracy_ordering(const sc_graph* g, uint32_t* order,
                                              uint32_t* back_degrees, uint32_t* degeneracy);
/* out_set must have capacity n; *out_len receives the core size. */
SC_API sc_status sc_graph_min_degree_peel(const sc_graph* g, uint32_t threshold, uint32_t* out_set,
                                          uint32_t* out_len);
/* mapping (optional, capacity n) receives original labels. */
SC_API sc_status sc_graph_remove_isolated(const sc_graph* g, sc_graph** out, uint32_t* mapping,
                                          uint32_t* out_n);

SC_API sc_status sc_graph_triangle_count(const sc_graph* g, uint64_t* out);
SC_API sc_status sc_graph_contains_kst(const sc_graph* g, uint32_t s, uint32_t t, int* out);

/* Edge-list text format: '#' comments, "n m" header, then m lines "u v"
 * with 0 <= u < v < n in any order. The writer emits sorted canonical
 * order. */
SC_API sc_status sc_graph_read_file(const char* path, sc_graph** out);
SC_API sc_status sc_graph_write_file(const sc_graph* g, const char* path);

/* ---------------- sparsity audit ---------------- */

typedef struct sc_sparsity_report sc_sparsity_report;

SC_API sc_status sc_sparsity_audit(const sc_graph* g, double epsilon, sc_sparsity_report** out);
SC_API void sc_sparsity_report_free(sc_sparsity_report* r);
SC_API double sc_sparsity_report_c_star(const sc_sparsity_report* r);
SC_API uint32_t sc_sparsity_report_witness(const sc_sparsity_report* r);
SC_API sc_status sc_sparsity_report_row(const sc_sparsity_report* r, uint32_t vertex,
                                        uint32_t* degree, uint64_t* nbhd_edges, double* local_c);
SC_API sc_status sc_sparsity_report_csv(const sc_sparsity_report* r, char** out);
SC_API sc_status sc_sparsity_report_table(const sc_sparsity_report* r, char** out);

/* *holds = 1 when every vertex obeys e(G[N(v)]) <= c d^{2-eps}; on failure
 * *witness names a violating vertex. */
SC_API sc_status sc_is_sparse(const sc_graph* g, double c, double epsilon, int* holds,
                              uint32_t* witness);
/* lhs = sum over edges of (d_u d_v)^{tau-1} d_uv, rhs = c * sum d_v^tau. */
SC_API sc_status sc_codegree_sum_check(const sc_graph* g, double c, double epsilon, double* lhs,
                                       double* rhs, int* holds);

/* ---------------- embedding ---------------- */

typedef struct sc_params {
    double epsilon;
    double c;
    double tau;    /* min{eps, 1/2} */
    double rho;    /* min{c/32, 1/(32c)} */
    double delta1; /* rho/16 */
    double delta2; /* rho^2/8 */
} sc_params;

SC_API sc_status sc_params_make(double epsilon, double c, sc_params* out);

typedef struct sc_embedding sc_embedding;

SC_API sc_status sc_embedding_new(const sc_graph* g, double epsilon, double c, sc_embedding** out);
SC_API void sc_embedding_free(sc_embedding* e);
SC_API sc_status sc_embedding_params(const sc_embedding* e, sc_params* out);
SC_API sc_status sc_embedding_vertex_norm(const sc_embedding* e, uint32_t v, double* out);
SC_API sc_status sc_embedding_edge_inner_product(const sc_embedding* e, uint32_t u, uint32_t v,
                                                 double* out);
/* z and out have length n; out[i] = <x^i, z>. */
SC_API sc_status sc_embedding_project_all(const sc_embedding* e, const double* z, uint32_t len,
                                          double* out);

/* ---------------- rounding ---------------- */

typedef struct sc_cut sc_cut;

SC_API void sc_cut_free(sc_cut* cut);
SC_API uint32_t sc_cut_vertex_count(const sc_cut* cut);
SC_API uint64_t sc_cut_crossing(const sc_cut* cut);
SC_API double sc_cut_surplus(const sc_cut* cut);
SC_API sc_status sc_cut_side(const sc_cut* cut, uint32_t v, int* side);
/* "0101...\ncrossing=<int> surplus=<decimal>\n" */
SC_API sc_status sc_cut_format(const sc_cut* cut, char** out);

SC_API sc_status sc_expected_cut_value(const sc_embedding* e, double* out);
SC_API sc_status sc_hyperplane_cut(const sc_embedding* e, uint64_t seed, sc_cut** out);
SC_API sc_status sc_local_search_refine(const sc_graph* g, const sc_cut* cut, sc_cut** out);

typedef struct sc_trial_stats {
    uint64_t min_crossing;
    uint64_t max_crossing;
    double mean_crossing;
    uint32_t best_trial;
} sc_trial_stats;

/* Per-trial seeds are a pure function of (master_seed, trial index), so any
 * thread count produces the same cut and stats. */
SC_API sc_status sc_best_of_trials(const sc_embedding* e, uint64_t master_seed, uint32_t trials,
                                   int refine, uint32_t threads, sc_cut** out,
                                   sc_trial_stats* stats);

/* partial is a cut of the subgraph induced by subset (length k). */
SC_API sc_status sc_extend_cut(const sc_graph* g, const uint32_t* subset, uint32_t k,
                               const sc_cut* partial, sc_cut** out);

typedef struct sc_dichotomy_report {
    int dense_core;     /* 0: rounded whole (degenerate), 1: rounded the core */
    double threshold_d; /* scale * m^{1/(2+tau)} */
    uint32_t degeneracy;
    double bound;       /* guaranteed surplus for the taken branch */
    uint32_t core_size; /* 0 on the degenerate branch */
    double core_c_star;
    sc_trial_stats stats;
} sc_dichotomy_report;

SC_API sc_status sc_dichotomy_cut(const sc_graph* g, double epsilon, double c, double scale,
                                  uint64_t master_seed, uint32_t trials, int refine, sc_cut** out,
                                  sc_dichotomy_report* report);

/* ---------------- bounds ---------------- */

SC_API double sc_edwards_bound(uint64_t m);
SC_API sc_status sc_embedding_lower_bound(const sc_graph* g, double epsilon, double c,
                                          double* out);
SC_API sc_status sc_degeneracy_bound(const sc_graph* g, double epsilon, double c, double* out);
SC_API sc_status sc_avg_degree_bound(const sc_graph* g, double epsilon, double c, double* out);
SC_API sc_status sc_eigen_upper_bound(const sc_graph* g, double eigen_tol, double* out);
SC_API sc_status sc_appendix_sum_bound(const sc_graph* g, double c, double alpha, double tau,
                                       double* bound, uint64_t* t, int* hypothesis_checked);
/* alpha may be NULL; then only chi3 is produced and *chi2 is untouched. */
SC_API sc_status sc_predicted_exponents(double epsilon, const double* alpha, double* chi3,
                                        double* chi2);

typedef struct sc_bound_report sc_bound_report;

SC_API sc_status sc_full_report(const sc_graph* g, double epsilon, double c,
                                sc_bound_report** out);
SC_API void sc_bound_report_free(sc_bound_report* r);
SC_API uint32_t sc_bound_report_size(const sc_bound_report* r);
/* kind: 0 lower, 1 upper, 2 exact. name/source stay valid with the handle. */
SC_API sc_status sc_bound_report_entry(const sc_bound_report* r, uint32_t index, const char** name,
                                       int* kind, double* value, const char** source);
SC_API sc_status sc_bound_report_csv(const sc_bound_report* r, char** out);
SC_API sc_status sc_bound_report_table(const sc_bound_report* r, char** out);

/* ---------------- generators ---------------- */

SC_API sc_status sc_gen_complete(uint32_t n, sc_graph** out);
SC_API sc_status sc_gen_cycle(uint32_t n, sc_graph** out);
SC_API sc_status sc_gen_wheel_even(uint32_t k, sc_graph** out);
SC_API sc_status sc_gen_complete_bipartite(uint32_t s, uint32_t t, sc_graph** out);
SC_API sc_status sc_gen_gnp(uint32_t n, double p, uint64_t seed, sc_graph** out);
SC_API sc_status sc_gen_random_triangle_free(uint32_t n, uint64_t seed, sc_graph** out);
SC_API sc_status sc_gen_dgt_srg(uint32_t q, uint32_t k, sc_graph** out);
SC_API sc_status sc_gen_polarity_er(uint32_t q, sc_graph** out);

typedef struct sc_srg_params {
    uint32_t q;
    uint32_t k;
    uint32_t n;
    uint32_t degree;
    int32_t lambda_min;
    uint32_t adjacent_codegree;
} sc_srg_params;

SC_API sc_status sc_srg_params_make(uint32_t q, uint32_t k, sc_srg_params* out);

/* ---------------- oracle ---------------- */

/* Exhaustive maximum cut, n <= 24. witness may be NULL. */
SC_API sc_status sc_exact_maxcut(const sc_graph* g, uint64_t* mc, sc_cut** witness);
SC_API sc_status sc_exact_surplus(const sc_graph* g, double* out);
SC_API sc_status sc_smallest_eigenvalue(const sc_graph* g, double tol, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SURPLUSCUT_H */
