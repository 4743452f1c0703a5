// surplus-cut command line: generate graph families, audit neighborhood
// sparsity, round embeddings to cuts, tabulate surplus bounds, and run
// size sweeps with exponent fits. Links the C API only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "surpluscut.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

int exit_code_for(sc_status status) {
    switch (status) {
        case SC_OK:
            return kExitOk;
        case SC_ERR_PARSE:
        case SC_ERR_IO:
        case SC_ERR_SELF_LOOP:
        case SC_ERR_DUPLICATE_EDGE:
        case SC_ERR_VERTEX_OUT_OF_RANGE:
            return kExitParse;
        case SC_ERR_NOT_SPARSE:
        case SC_ERR_ISOLATED_VERTEX:
        case SC_ERR_NOT_REGULAR:
        case SC_ERR_NOT_PRIME:
        case SC_ERR_TOO_LARGE:
        case SC_ERR_INVALID_ARGUMENT:
        case SC_ERR_NO_CONVERGENCE:
            return kExitPrecondition;
        default:
            return kExitInternal;
    }
}

struct CliError {
    int code;
    std::string message;
};

void check(sc_status status) {
    if (status != SC_OK)
        throw CliError{exit_code_for(status),
                       std::string(sc_status_name(status)) + ": " + sc_last_error_message()};
}

[[noreturn]] void usage_error(const std::string& message) {
    throw CliError{kExitUsage, message};
}

struct GraphHandle {
    sc_graph* g = nullptr;
    GraphHandle() = default;
    explicit GraphHandle(sc_graph* handle) : g(handle) {}
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    GraphHandle(GraphHandle&& other) : g(other.g) { other.g = nullptr; }
    GraphHandle& operator=(GraphHandle&& other) {
        std::swap(g, other.g);
        return *this;
    }
    ~GraphHandle() { sc_graph_free(g); }
};

struct CutHandle {
    sc_cut* cut = nullptr;
    ~CutHandle() { sc_cut_free(cut); }
};

struct EmbeddingHandle {
    sc_embedding* e = nullptr;
    ~EmbeddingHandle() { sc_embedding_free(e); }
};

std::string take_string(sc_status status, char** buf) {
    check(status);
    std::string out(*buf);
    sc_string_free(*buf);
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out.good()) throw CliError{kExitParse, "cannot open " + path + " for writing"};
    out << text;
    if (!out.good()) throw CliError{kExitInternal, "write failed for " + path};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string family;
    uint32_t n = 0, s = 0, t = 0, k = 0, q = 0;
    double p = -1.0;
    uint64_t seed = 0;
    std::string out_path;
};

GraphHandle build_family(const GenOptions& opt) {
    sc_graph* g = nullptr;
    auto need = [&](bool ok, const char* what) {
        if (!ok) usage_error(std::string("family '") + opt.family + "' requires " + what);
    };
    if (opt.family == "complete") {
        need(opt.n > 0, "--n");
        check(sc_gen_complete(opt.n, &g));
    } else if (opt.family == "cycle") {
        need(opt.n > 0, "--n");
        check(sc_gen_cycle(opt.n, &g));
    } else if (opt.family == "wheel") {
        need(opt.k > 0, "--k");
        check(sc_gen_wheel_even(opt.k, &g));
    } else if (opt.family == "kst") {
        need(opt.s > 0 && opt.t > 0, "--s and --t");
        check(sc_gen_complete_bipartite(opt.s, opt.t, &g));
    } else if (opt.family == "gnp") {
        need(opt.n > 0, "--n");
        need(opt.p >= 0.0, "--p");
        check(sc_gen_gnp(opt.n, opt.p, opt.seed, &g));
    } else if (opt.family == "trianglefree") {
        need(opt.n > 0, "--n");
        check(sc_gen_random_triangle_free(opt.n, opt.seed, &g));
    } else if (opt.family == "dgt") {
        need(opt.q > 0, "--q");
        uint32_t k = opt.k > 0 ? opt.k : static_cast<uint32_t>(std::lround(std::sqrt(opt.q)));
        check(sc_gen_dgt_srg(opt.q, k, &g));
    } else if (opt.family == "polarity") {
        need(opt.q > 0, "--q");
        check(sc_gen_polarity_er(opt.q, &g));
    } else {
        usage_error("unknown family '" + opt.family +
                    "' (expected complete|cycle|wheel|kst|gnp|trianglefree|dgt|polarity)");
    }
    return GraphHandle(g);
}

int cmd_gen(const GenOptions& opt) {
    GraphHandle g = build_family(opt);
    check(sc_graph_write_file(g.g, opt.out_path.c_str()));
    std::cerr << "wrote " << opt.out_path << ": n=" << sc_graph_vertex_count(g.g)
              << " m=" << sc_graph_edge_count(g.g) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- audit

int cmd_audit(const std::string& path, double epsilon, const std::string& format,
              const std::string& out_path) {
    sc_graph* raw = nullptr;
    check(sc_graph_read_file(path.c_str(), &raw));
    GraphHandle g(raw);

    sc_sparsity_report* report = nullptr;
    check(sc_sparsity_audit(g.g, epsilon, &report));
    char* buf = nullptr;
    std::string text = format == "csv" ? take_string(sc_sparsity_report_csv(report, &buf), &buf)
                                       : take_string(sc_sparsity_report_table(report, &buf), &buf);
    sc_sparsity_report_free(report);
    emit(text, out_path);
    return kExitOk;
}

// ---------------------------------------------------------------- cut

// auto policy: c_star from the audit floored at 1e-9, with triangle-free
// graphs (c_star = 0) defaulting to c = 1 so rho stays well-defined
double resolve_c(sc_graph* g, const std::string& c_flag, double epsilon) {
    if (c_flag != "auto") {
        try {
            size_t pos = 0;
            double value = std::stod(c_flag, &pos);
            if (pos != c_flag.size()) throw std::invalid_argument(c_flag);
            return value;
        } catch (const std::exception&) {
            usage_error("--c expects a number or 'auto', got '" + c_flag + "'");
        }
    }
    sc_sparsity_report* report = nullptr;
    check(sc_sparsity_audit(g, epsilon, &report));
    double c_star = sc_sparsity_report_c_star(report);
    sc_sparsity_report_free(report);
    if (c_star == 0.0) return 1.0;
    return std::max(c_star, 1e-9);
}

void require_sparse(sc_graph* g, double c, double epsilon) {
    int holds = 0;
    uint32_t witness = 0;
    check(sc_is_sparse(g, c, epsilon, &holds, &witness));
    if (!holds)
        throw CliError{kExitPrecondition,
                       "graph is not (" + fmt(c) + "," + fmt(epsilon) +
                           ")-sparse; witness vertex " + std::to_string(witness)};
}

std::string format_cut(sc_cut* cut) {
    char* buf = nullptr;
    return take_string(sc_cut_format(cut, &buf), &buf);
}

struct CutOptions {
    std::string path;
    double epsilon = 1.0;
    std::string c_flag = "auto";
    uint32_t trials = 200;
    uint64_t seed = 0;
    bool local_search = true;
    uint32_t threads = 1;
    bool dichotomy = false;
    double scale = 1.0;
    std::string out_path;
};

int cmd_cut(const CutOptions& opt) {
    sc_graph* raw = nullptr;
    check(sc_graph_read_file(opt.path.c_str(), &raw));
    GraphHandle g(raw);
    uint32_t n = sc_graph_vertex_count(g.g);
    uint64_t m = sc_graph_edge_count(g.g);
    if (opt.trials < 1) usage_error("--trials must be at least 1");

    sc_graph* stripped_raw = nullptr;
    std::vector<uint32_t> mapping(n);
    uint32_t stripped_n = 0;
    check(sc_graph_remove_isolated(g.g, &stripped_raw, mapping.data(), &stripped_n));
    GraphHandle stripped(stripped_raw);
    mapping.resize(stripped_n);

    double c = resolve_c(stripped.g, opt.c_flag, opt.epsilon);
    require_sparse(stripped.g, c, opt.epsilon);

    sc_params params;
    check(sc_params_make(opt.epsilon, c, &params));
    std::ostringstream summary;
    summary << "graph " << opt.path << ": n=" << n << " m=" << m
            << " (isolated removed: " << n - stripped_n << ")\n";
    summary << "epsilon=" << fmt(params.epsilon) << " c=" << fmt(params.c)
            << " tau=" << fmt(params.tau) << " rho=" << fmt(params.rho)
            << " delta1=" << fmt(params.delta1) << " delta2=" << fmt(params.delta2) << "\n";

    EmbeddingHandle embedding;
    check(sc_embedding_new(stripped.g, opt.epsilon, c, &embedding.e));
    {
        double expected = 0.0, lower = 0.0;
        check(sc_expected_cut_value(embedding.e, &expected));
        check(sc_embedding_lower_bound(stripped.g, opt.epsilon, c, &lower));
        summary << "expected_cut_value=" << fmt(expected) << "\n";
        summary << "sparse_embedding_lower_bound=" << fmt(lower) << "\n";
    }

    CutHandle final_cut;
    if (opt.dichotomy) {
        sc_dichotomy_report report;
        check(sc_dichotomy_cut(g.g, opt.epsilon, c, opt.scale, opt.seed, opt.trials,
                               opt.local_search ? 1 : 0, &final_cut.cut, &report));
        summary << "dichotomy: branch=" << (report.dense_core ? "dense-core" : "degenerate")
                << " d=" << fmt(report.threshold_d) << " degeneracy=" << report.degeneracy
                << " bound=" << fmt(report.bound);
        if (report.dense_core)
            summary << " core_size=" << report.core_size
                    << " core_c_star=" << fmt(report.core_c_star);
        summary << "\n";
        summary << "trials=" << opt.trials << " seed=" << opt.seed
                << " min=" << report.stats.min_crossing << " mean="
                << fmt(report.stats.mean_crossing) << " max=" << report.stats.max_crossing
                << "\n";
    } else {
        CutHandle best;
        sc_trial_stats stats;
        check(sc_best_of_trials(embedding.e, opt.seed, opt.trials, opt.local_search ? 1 : 0,
                                opt.threads, &best.cut, &stats));
        check(sc_extend_cut(g.g, mapping.data(), stripped_n, best.cut, &final_cut.cut));
        summary << "trials=" << opt.trials << " seed=" << opt.seed << " local_search="
                << (opt.local_search ? "on" : "off") << " best_trial=" << stats.best_trial
                << " min=" << stats.min_crossing << " mean=" << fmt(stats.mean_crossing)
                << " max=" << stats.max_crossing << "\n";
    }
    char sbuf[64];
    std::snprintf(sbuf, sizeof(sbuf), "best: crossing=%llu surplus=%.1f\n",
                  static_cast<unsigned long long>(sc_cut_crossing(final_cut.cut)),
                  sc_cut_surplus(final_cut.cut));
    summary << sbuf;

    std::cout << summary.str();
    if (!opt.out_path.empty()) {
        write_text(opt.out_path, format_cut(final_cut.cut));
        std::cout << "cut written to " << opt.out_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const std::string& path, double epsilon, const std::string& c_flag,
               const std::string& format, const std::string& out_path) {
    sc_graph* raw = nullptr;
    check(sc_graph_read_file(path.c_str(), &raw));
    GraphHandle g(raw);

    sc_graph* stripped_raw = nullptr;
    check(sc_graph_remove_isolated(g.g, &stripped_raw, nullptr, nullptr));
    GraphHandle stripped(stripped_raw);

    double c = resolve_c(stripped.g, c_flag, epsilon);
    require_sparse(stripped.g, c, epsilon);

    sc_bound_report* report = nullptr;
    check(sc_full_report(g.g, epsilon, c, &report));
    char* buf = nullptr;
    std::string text = format == "csv" ? take_string(sc_bound_report_csv(report, &buf), &buf)
                                       : take_string(sc_bound_report_table(report, &buf), &buf);
    sc_bound_report_free(report);
    emit(text, out_path);
    return kExitOk;
}

// ---------------------------------------------------------------- experiment

struct ExperimentOptions {
    std::string family;
    std::vector<uint32_t> sizes;
    double epsilon = 1.0;
    std::string c_flag = "auto";
    uint32_t trials = 200;
    uint64_t seed = 0;
    bool local_search = true;
    uint32_t s = 2;      // fixed side for kst sweeps
    double p = 0.1;      // edge probability for gnp sweeps
    uint32_t k = 0;      // dgt line count; 0 = round(sqrt(q))
    std::string out_path;
};

struct Row {
    uint32_t param, n;
    uint64_t m;
    double epsilon, c;
    double edwards, embedding_lower, degeneracy_lower, avg_degree_lower;
    std::optional<double> eigen_upper;
    double expected_cut;
    uint64_t best_crossing;
    double best_surplus;
    std::optional<uint64_t> exact_mc;
    std::optional<double> exact_surplus;
    std::optional<double> tightness_ratio;
};

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int cmd_experiment(const ExperimentOptions& opt) {
    if (opt.sizes.empty()) usage_error("--sizes must list at least one size");
    bool want_fit = opt.sizes.size() >= 5;
    if (!want_fit && opt.family != "dgt")
        usage_error("exponent fits need at least 5 sizes; got " +
                    std::to_string(opt.sizes.size()));

    std::vector<Row> rows;
    for (uint32_t size : opt.sizes) {
        double t0 = now_ms();
        GenOptions gen;
        gen.family = opt.family;
        gen.n = size;
        gen.q = size;
        gen.s = opt.s;
        gen.t = size;
        gen.p = opt.p;
        gen.seed = opt.seed ^ size;
        if (opt.family == "dgt") {
            // line count k = round(q^{eps/(1-eps)}), clamped to [1, q]
            gen.k = opt.k;
            if (gen.k == 0) {
                double expo = opt.epsilon >= 1.0 ? 1.0 : opt.epsilon / (1.0 - opt.epsilon);
                auto k = static_cast<uint32_t>(std::lround(std::pow(double(size), expo)));
                gen.k = std::clamp<uint32_t>(k, 1, size);
            }
        } else {
            gen.k = size;
        }
        GraphHandle g = build_family(gen);
        double t1 = now_ms();

        sc_graph* stripped_raw = nullptr;
        std::vector<uint32_t> mapping(sc_graph_vertex_count(g.g));
        uint32_t stripped_n = 0;
        check(sc_graph_remove_isolated(g.g, &stripped_raw, mapping.data(), &stripped_n));
        GraphHandle h(stripped_raw);
        mapping.resize(stripped_n);

        Row row{};
        row.param = size;
        row.n = sc_graph_vertex_count(g.g);
        row.m = sc_graph_edge_count(g.g);
        row.epsilon = opt.epsilon;
        row.c = resolve_c(h.g, opt.c_flag, opt.epsilon);
        require_sparse(h.g, row.c, opt.epsilon);
        double t2 = now_ms();

        row.edwards = sc_edwards_bound(row.m);
        check(sc_embedding_lower_bound(h.g, opt.epsilon, row.c, &row.embedding_lower));
        check(sc_degeneracy_bound(h.g, opt.epsilon, row.c, &row.degeneracy_lower));
        check(sc_avg_degree_bound(h.g, opt.epsilon, row.c, &row.avg_degree_lower));
        {
            double upper = 0.0;
            sc_status st = sc_eigen_upper_bound(h.g, 1e-8, &upper);
            if (st == SC_OK)
                row.eigen_upper = upper;
            else if (st != SC_ERR_NOT_REGULAR)
                check(st);
        }
        // measured at every epsilon; only the eps <= 1/3 regime carries a
        // tightness guarantee
        if (row.eigen_upper && row.embedding_lower > 0.0)
            row.tightness_ratio = *row.eigen_upper / row.embedding_lower;
        double t3 = now_ms();

        EmbeddingHandle embedding;
        check(sc_embedding_new(h.g, opt.epsilon, row.c, &embedding.e));
        check(sc_expected_cut_value(embedding.e, &row.expected_cut));
        CutHandle best;
        check(sc_best_of_trials(embedding.e, opt.seed, opt.trials, opt.local_search ? 1 : 0, 1,
                                &best.cut, nullptr));
        CutHandle lifted;
        check(sc_extend_cut(g.g, mapping.data(), stripped_n, best.cut, &lifted.cut));
        row.best_crossing = sc_cut_crossing(lifted.cut);
        row.best_surplus = sc_cut_surplus(lifted.cut);
        double t4 = now_ms();

        if (row.n <= 24 && row.n >= 1) {
            uint64_t mc = 0;
            check(sc_exact_maxcut(g.g, &mc, nullptr));
            row.exact_mc = mc;
            row.exact_surplus = static_cast<double>(mc) - static_cast<double>(row.m) / 2.0;
        }
        double t5 = now_ms();

        // row self-consistency: lower <= achieved <= exact <= upper where
        // defined; the lower <= achieved leg is only an expectation
        // guarantee, so a shortfall warns instead of failing
        double max_lower = std::max({row.edwards, row.embedding_lower, row.degeneracy_lower,
                                     row.avg_degree_lower});
        auto inconsistent = [&](const char* what) {
            throw CliError{kExitInternal, std::string("inconsistent record at param ") +
                                              std::to_string(size) + ": " + what};
        };
        if (row.exact_surplus) {
            if (max_lower > *row.exact_surplus + 1e-9) inconsistent("lower bound above exact");
            if (row.best_surplus > *row.exact_surplus + 1e-9) inconsistent("cut above exact");
            if (row.eigen_upper && *row.exact_surplus > *row.eigen_upper + 1e-9)
                inconsistent("exact above upper bound");
        }
        if (row.eigen_upper && max_lower > *row.eigen_upper + 1e-9)
            inconsistent("lower bound above upper bound");
        if (row.best_surplus < max_lower - 1e-9)
            std::fprintf(stderr, "# warning param=%u best surplus %.6g below lower bound %.6g\n",
                         size, row.best_surplus, max_lower);

        std::fprintf(stderr,
                     "# timing family=%s param=%u gen=%.1fms audit=%.1fms bounds=%.1fms "
                     "round=%.1fms exact=%.1fms\n",
                     opt.family.c_str(), size, t1 - t0, t2 - t1, t3 - t2, t4 - t3, t5 - t4);
        rows.push_back(std::move(row));
    }

    std::ostringstream csv;
    csv << "# surplus-cut v1\n";
    csv << "family,param,n,m,epsilon,c,edwards,embedding_lower,degeneracy_lower,"
           "avg_degree_lower,eigen_upper,expected_cut,best_crossing,best_surplus,exact_mc,"
           "exact_surplus,tightness_ratio\n";
    for (const Row& row : rows) {
        csv << opt.family << ',' << row.param << ',' << row.n << ',' << row.m << ','
            << fmt(row.epsilon) << ',' << fmt(row.c) << ',' << fmt(row.edwards) << ','
            << fmt(row.embedding_lower) << ',' << fmt(row.degeneracy_lower) << ','
            << fmt(row.avg_degree_lower) << ','
            << (row.eigen_upper ? fmt(*row.eigen_upper) : "") << ',' << fmt(row.expected_cut)
            << ',' << row.best_crossing << ',' << fmt(row.best_surplus) << ','
            << (row.exact_mc ? std::to_string(*row.exact_mc) : "") << ','
            << (row.exact_surplus ? fmt(*row.exact_surplus) : "") << ','
            << (row.tightness_ratio ? fmt(*row.tightness_ratio) : "") << '\n';
    }

    if (want_fit) {
        // least squares on log(embedding_lower) vs log(m)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (const Row& row : rows) {
            if (row.m == 0 || row.embedding_lower <= 0.0) continue;
            double x = std::log(static_cast<double>(row.m));
            double y = std::log(row.embedding_lower);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++count;
        }
        if (count >= 5) {
            double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
            double chi3 = 0.0;
            check(sc_predicted_exponents(opt.epsilon, nullptr, &chi3, nullptr));
            csv << "# fit slope=" << fmt(slope) << " points=" << count << '\n';
            csv << "# predicted chi3=" << fmt(chi3) << '\n';
        }
    }
    if (opt.family == "dgt") {
        double lo = 0.0, hi = 0.0;
        bool any = false;
        for (const Row& row : rows)
            if (row.tightness_ratio) {
                if (!any || *row.tightness_ratio < lo) lo = *row.tightness_ratio;
                if (!any || *row.tightness_ratio > hi) hi = *row.tightness_ratio;
                any = true;
            }
        if (any) csv << "# ratio_spread=" << fmt(hi / lo) << '\n';
    }
    emit(csv.str(), opt.out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surplus-cut: cuts beating m/2 in graphs with sparse neighborhoods"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph family as an edge-list file");
    gen_cmd->add_option("family", gen.family,
                        "complete|cycle|wheel|kst|gnp|trianglefree|dgt|polarity")
        ->required();
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--s", gen.s, "left side size (kst)");
    gen_cmd->add_option("--t", gen.t, "right side size (kst)");
    gen_cmd->add_option("--k", gen.k, "wheel half-length / dgt line count");
    gen_cmd->add_option("--q", gen.q, "prime field order (dgt, polarity)");
    gen_cmd->add_option("--p", gen.p, "edge probability (gnp)");
    gen_cmd->add_option("--seed", gen.seed, "random seed");
    gen_cmd->add_option("--out", gen.out_path, "output edge-list path")->required();

    std::string audit_path, audit_format = "table", audit_out;
    double audit_eps = 1.0;
    auto* audit_cmd = app.add_subcommand("audit", "per-vertex neighborhood sparsity report");
    audit_cmd->add_option("path", audit_path, "edge-list file")->required();
    audit_cmd->add_option("--eps", audit_eps, "sparsity exponent epsilon in [0,1]")->required();
    audit_cmd->add_option("--format", audit_format, "csv|table")
        ->check(CLI::IsMember({"csv", "table"}));
    audit_cmd->add_option("--out", audit_out, "write report here instead of stdout");

    CutOptions cut;
    auto* cut_cmd = app.add_subcommand("cut", "round the embedding to a concrete cut");
    cut_cmd->add_option("path", cut.path, "edge-list file")->required();
    cut_cmd->add_option("--eps", cut.epsilon, "sparsity exponent epsilon in [0,1]")->required();
    cut_cmd->add_option("--c", cut.c_flag, "sparsity constant, or 'auto'");
    cut_cmd->add_option("--trials", cut.trials, "rounding trials (default 200)");
    cut_cmd->add_option("--seed", cut.seed, "master seed (default 0)");
    cut_cmd->add_flag("--local-search,!--no-local-search", cut.local_search,
                      "refine each trial by greedy flips (default on)");
    cut_cmd->add_option("--threads", cut.threads, "worker threads for trials (default 1)");
    cut_cmd->add_flag("--dichotomy", cut.dichotomy,
                      "use the degeneracy dichotomy pipeline instead of plain rounding");
    cut_cmd->add_option("--scale", cut.scale, "dichotomy threshold scale (default 1.0)");
    cut_cmd->add_option("--out", cut.out_path, "write the best cut here");

    std::string bounds_path, bounds_c = "auto", bounds_format = "table", bounds_out;
    double bounds_eps = 1.0;
    auto* bounds_cmd = app.add_subcommand("bounds", "every applicable surplus bound");
    bounds_cmd->add_option("path", bounds_path, "edge-list file")->required();
    bounds_cmd->add_option("--eps", bounds_eps, "sparsity exponent epsilon in [0,1]")->required();
    bounds_cmd->add_option("--c", bounds_c, "sparsity constant, or 'auto'");
    bounds_cmd->add_option("--format", bounds_format, "csv|table")
        ->check(CLI::IsMember({"csv", "table"}));
    bounds_cmd->add_option("--out", bounds_out, "write report here instead of stdout");

    ExperimentOptions exp;
    auto* exp_cmd = app.add_subcommand("experiment", "size sweep with CSV rows and exponent fit");
    exp_cmd->add_option("--family", exp.family,
                        "complete|cycle|wheel|kst|gnp|trianglefree|dgt|polarity")
        ->required();
    exp_cmd->add_option("--sizes", exp.sizes, "sweep sizes (n, or q for dgt/polarity)")
        ->required()
        ->delimiter(',');
    exp_cmd->add_option("--eps", exp.epsilon, "sparsity exponent epsilon in [0,1]")->required();
    exp_cmd->add_option("--c", exp.c_flag, "sparsity constant, or 'auto'");
    exp_cmd->add_option("--trials", exp.trials, "rounding trials per instance (default 200)");
    exp_cmd->add_option("--seed", exp.seed, "master seed (default 0)");
    exp_cmd->add_flag("--local-search,!--no-local-search", exp.local_search,
                      "refine each trial (default on)");
    exp_cmd->add_option("--s", exp.s, "fixed left side for kst sweeps");
    exp_cmd->add_option("--p", exp.p, "edge probability for gnp sweeps");
    exp_cmd->add_option("--k", exp.k, "dgt line count; default round(sqrt(q))");
    exp_cmd->add_option("--out", exp.out_path, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (audit_cmd->parsed()) return cmd_audit(audit_path, audit_eps, audit_format, audit_out);
        if (cut_cmd->parsed()) return cmd_cut(cut);
        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_path, bounds_eps, bounds_c, bounds_format, bounds_out);
        if (exp_cmd->parsed()) return cmd_experiment(exp);
    } catch (const CliError& err) {
        std::cerr << "error: " << err.message << "\n";
        return err.code;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
