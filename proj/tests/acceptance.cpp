// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria run against a fixed corpus of 100 seeded random graphs (n <= 200,
// mixed densities, isolated vertices stripped) plus the named instances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "edge_list.hpp"
#include "embedding.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "rounding.hpp"
#include "sparsity.hpp"
#include "test_util.hpp"

using namespace surplus;
namespace fs = std::filesystem;

namespace {

constexpr double kEps[] = {0.0, 1.0 / 3.0, 0.5, 1.0};
constexpr double kC[] = {0.25, 1.0, 4.0};

int g_violations = 0;

void violation(const std::string& what) {
    if (++g_violations <= 20) std::fprintf(stderr, "  violation: %s\n", what.c_str());
}

std::vector<Graph> build_corpus() {
    std::vector<Graph> corpus;
    SplitMix64 rng(0xC0FFEE);
    while (corpus.size() < 100) {
        uint32_t cls = corpus.size() % 4;
        uint32_t n = 0;
        double p = 0.0;
        switch (cls) {
            case 0: n = 4 + uint32_t(rng.bounded(197)); p = 2.0 / n; break;
            case 1: n = 4 + uint32_t(rng.bounded(197)); p = 6.0 / n; break;
            case 2: n = 4 + uint32_t(rng.bounded(147)); p = 0.08; break;
            default: n = 4 + uint32_t(rng.bounded(97)); p = 0.35; break;
        }
        Graph g = gnp(n, std::min(p, 1.0), rng.next()).remove_isolated().graph;
        if (g.edge_count() == 0) continue;
        corpus.push_back(std::move(g));
    }
    return corpus;
}

// ---- criterion 1: closed forms vs materialized vectors ----
bool criterion1(const std::vector<Graph>& corpus) {
    bool ok = true;
    for (const Graph& g : corpus) {
        uint32_t n = g.vertex_count();
        SplitMix64 zrng(n * 7919 + 1);
        std::vector<double> z(n), proj(n);
        for (double& zi : z) zi = zrng.gaussian();
        for (double eps : kEps)
            for (double c : kC) {
                auto params = EmbeddingParams::make(eps, c);
                Embedding e(g, params);
                testutil::MaterializedEmbedding direct(g, params);
                for (uint32_t v = 0; v < n; ++v)
                    if (testutil::rel_err(e.vertex_norm(v), direct.norm(v)) > 1e-9) {
                        violation("norm mismatch");
                        ok = false;
                    }
                for (auto [u, v] : g.edges())
                    if (testutil::rel_err(e.edge_inner_product(u, v), direct.inner_product(u, v)) >
                        1e-9) {
                        violation("inner product mismatch");
                        ok = false;
                    }
                e.project_all(z, proj);
                for (uint32_t v = 0; v < n; ++v)
                    if (testutil::rel_err(proj[v], direct.project(v, z)) > 1e-9) {
                        violation("projection mismatch");
                        ok = false;
                    }
            }
    }
    return ok;
}

// ---- criterion 2: the three structural claims ----
bool criterion2(const std::vector<Graph>& corpus) {
    bool ok = true;
    const double sqrt2 = std::sqrt(2.0);
    for (const Graph& g : corpus) {
        double n = g.vertex_count();
        for (double eps : kEps)
            for (double c : kC) {
                auto p = EmbeddingParams::make(eps, c);
                Embedding e(g, p);
                for (uint32_t v = 0; v < g.vertex_count(); ++v) {
                    double norm = e.vertex_norm(v);
                    if (norm < 1.0 - 1e-12 || norm > sqrt2 + 1e-12) {
                        violation("norm outside [1, sqrt(2)]");
                        ok = false;
                    }
                }
                for (auto [u, v] : g.edges()) {
                    double du = g.degree(u), dv = g.degree(v);
                    double dij = g.codegree(u, v);
                    double prod_tau = pow_tau(du * dv, p.tau);
                    double cap = -p.rho * (pow_tau(du, p.tau) / du + pow_tau(dv, p.tau) / dv) -
                                 p.rho * p.rho * prod_tau / n +
                                 4.0 * p.rho * p.rho * prod_tau / (du * dv) * dij;
                    if (e.edge_inner_product(u, v) > cap + 1e-9) {
                        violation("edge inner product exceeds its cap");
                        ok = false;
                    }
                }
                if (is_sparse(g, c, eps).sparse) {
                    auto check = codegree_sum_check(g, c, eps);
                    if (!check.holds) {
                        violation("codegree-sum inequality failed on a sparse instance");
                        ok = false;
                    }
                }
            }
    }
    return ok;
}

// ---- criterion 3: the main surplus inequality, deterministically ----
bool criterion3(const std::vector<Graph>& corpus) {
    bool ok = true;
    for (const Graph& g : corpus) {
        for (double eps : kEps)
            for (double c : kC) {
                if (!is_sparse(g, c, eps).sparse) continue;
                Embedding e(g, EmbeddingParams::make(eps, c));
                double achieved = expected_cut_value(e) - g.edge_count() / 2.0;
                double lower = embedding_lower_bound(g, eps, c);
                if (achieved < lower - 1e-9) {
                    violation("expected surplus fell below the closed-form bound");
                    ok = false;
                }
            }
    }
    return ok;
}

// ---- criterion 4: oracle consistency ----
bool criterion4(const std::vector<Graph>& corpus) {
    bool ok = true;
    std::vector<Graph> small;
    for (const Graph& g : corpus)
        if (g.vertex_count() >= 1 && g.vertex_count() <= 16) small.push_back(g);
    small.push_back(cycle(5));
    small.push_back(complete(5));
    small.push_back(testutil::petersen());
    small.push_back(wheel_even(2));

    if (exact_maxcut(cycle(5)).mc != 4) {
        violation("mc(C_5) != 4");
        ok = false;
    }
    if (exact_maxcut(complete(5)).mc != 6) {
        violation("mc(K_5) != 6");
        ok = false;
    }
    if (exact_maxcut(testutil::petersen()).mc != 12) {
        violation("mc(Petersen) != 12");
        ok = false;
    }

    for (const Graph& g : small) {
        uint64_t mc = exact_maxcut(g).mc;
        double surplus = static_cast<double>(mc) - g.edge_count() / 2.0;
        if (surplus < edwards_bound(g.edge_count()) - 1e-9) {
            violation("exact surplus below the Edwards floor");
            ok = false;
        }
        Embedding e(g, EmbeddingParams::make(1.0, 4.0));
        for (uint64_t seed : {1ULL, 2ULL, 3ULL})
            if (hyperplane_cut(e, seed).crossing > mc) {
                violation("hyperplane cut beat the oracle");
                ok = false;
            }
        TrialPlan plan{11, 30};
        if (best_of_trials(e, plan, true).crossing > mc) {
            violation("best-of-trials beat the oracle");
            ok = false;
        }
        if (local_search_refine(g, make_cut(g, std::vector<uint8_t>(g.vertex_count(), 0)))
                .crossing > mc) {
            violation("local search beat the oracle");
            ok = false;
        }
        for (double eps : kEps)
            for (double c : kC) {
                if (!is_sparse(g, c, eps).sparse) continue;
                if (surplus < embedding_lower_bound(g, eps, c) - 1e-9) {
                    violation("exact surplus below the embedding bound");
                    ok = false;
                }
            }
    }
    return ok;
}

// ---- criterion 5: Monte Carlo expectation and the shipped-seed cut ----
bool criterion5() {
    bool ok = true;
    const uint32_t trials = 100000;
    struct Case {
        const char* name;
        Graph graph;
    } cases[] = {{"C_5", cycle(5)}, {"Petersen", testutil::petersen()}};
    for (auto& [name, g] : cases) {
        Embedding e(g, EmbeddingParams::make(1.0, 1.0));
        double expect = expected_cut_value(e);
        TrialPlan plan{2025, trials};
        uint64_t sum = 0;
        for (uint32_t t = 0; t < trials; ++t) sum += hyperplane_cut(e, plan.trial_seed(t)).crossing;
        double mean = static_cast<double>(sum) / trials;
        double m = static_cast<double>(g.edge_count());
        double budget = 4.0 * std::sqrt(m * m / (4.0 * trials));
        if (std::abs(mean - expect) > budget) {
            violation(std::string(name) + ": Monte Carlo mean drifted from the expectation");
            ok = false;
        }
    }

    Graph p = testutil::petersen();
    Embedding e(p, EmbeddingParams::make(1.0, 1.0));
    TrialPlan shipped{1, 200};
    if (best_of_trials(e, shipped, true).crossing != 12) {
        violation("best-of-200 with local search missed crossing 12 on Petersen");
        ok = false;
    }
    return ok;
}

// ---- criterion 6: the tightness construction ----
bool criterion6() {
    bool ok = true;
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (uint32_t q : {5u, 7u, 11u, 13u}) {
        uint32_t k = static_cast<uint32_t>(std::lround(std::sqrt(double(q))));
        SrgParams params = srg_params(q, k);
        Graph g = dgt_srg(q, k);
        for (uint32_t v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != params.degree) {
                violation("dgt regularity failed");
                ok = false;
                break;
            }
        bool codegree_ok = true;
        for (auto [u, v] : g.edges())
            if (g.codegree(u, v) != params.adjacent_codegree) codegree_ok = false;
        if (!codegree_ok) {
            violation("dgt adjacent codegree failed");
            ok = false;
        }
        double lambda = smallest_eigenvalue(g, 1e-7);
        if (std::abs(lambda - params.lambda_min) > 1e-6) {
            violation("dgt smallest eigenvalue drifted");
            ok = false;
        }

        double eps = 1.0 / 3.0;
        double c_star = min_sparsity_constant(g, eps).c_star;
        double upper = eigen_upper_bound(g);
        double cap = static_cast<double>(k) * q * q / 4.0;
        double lower = embedding_lower_bound(g, eps, c_star);
        for (double bound : {lower, degeneracy_bound(g, eps, c_star),
                             avg_degree_bound(g, eps, c_star), edwards_bound(g.edge_count())})
            if (bound > cap + 1e-9) {
                violation("a lower bound exceeded k q^2 / 4");
                ok = false;
            }
        double ratio = upper / lower;
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }
    if (ratio_hi / ratio_lo >= 3.0) {
        violation("tightness ratio varied by a factor 3 or more across q");
        ok = false;
    }
    return ok;
}

// ---- criterion 7: exponent floor on the triangle-free sweep ----
bool criterion7() {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (uint32_t n : {200u, 400u, 800u, 1200u, 1600u, 2000u}) {
        Graph g = random_triangle_free(n, 12345 + n);
        double lower = embedding_lower_bound(g, 1.0, 1.0);
        double x = std::log(static_cast<double>(g.edge_count()));
        double y = std::log(lower);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    std::fprintf(stderr, "  fitted slope %.4f (floor 0.72)\n", slope);
    if (slope < 0.72) {
        violation("fitted exponent fell below 0.72");
        return false;
    }
    return true;
}

// ---- criterion 8: degree power-sum floor ----
bool criterion8(const std::vector<Graph>& corpus) {
    bool ok = true;
    for (const Graph& g : corpus) {
        auto result = appendix_sum_bound(g, 1.0, 1.5, 0.5);
        if (!result.hypothesis_checked) continue;
        double sum_sqrt = 0.0;
        for (uint32_t v = 0; v < g.vertex_count(); ++v) sum_sqrt += std::sqrt(g.degree(v));
        if (sum_sqrt < result.bound - 1e-9) {
            violation("power-sum bound exceeded the actual degree sum");
            ok = false;
        }
        // C = 2 at tau = 1/2: the bound is exactly 2 sqrt(t) sqrt(m - t^1.5)
        double m = static_cast<double>(g.edge_count());
        double slack = m - std::pow(double(result.t), 1.5);
        if (result.t >= 1 && slack > 0.0) {
            double expect = 2.0 * std::sqrt(double(result.t)) * std::sqrt(slack);
            if (testutil::rel_err(result.bound, expect) > 1e-9) {
                violation("power-sum constant is not 2 at tau = 1/2");
                ok = false;
            }
        }
    }
    return ok;
}

// ---- criterion 9: bound chain and the dichotomy floor ----
bool criterion9(const std::vector<Graph>& corpus) {
    bool ok = true;
    for (const Graph& g : corpus) {
        for (double eps : kEps)
            for (double c : kC) {
                if (!is_sparse(g, c, eps).sparse) continue;
                auto p = EmbeddingParams::make(eps, c);
                double middle = 0.0;
                for (uint32_t v = 0; v < g.vertex_count(); ++v)
                    middle += pow_tau(g.degree(v), p.tau);
                middle *= p.delta1;
                if (degeneracy_bound(g, eps, c) > middle + 1e-9 ||
                    middle > embedding_lower_bound(g, eps, c) + 1e-9) {
                    violation("degeneracy <= delta1 sum <= embedding chain broke");
                    ok = false;
                }
            }
    }
    TrialPlan plan{7, 60};
    for (size_t i = 0; i < corpus.size(); i += 7) {
        const Graph& g = corpus[i];
        double eps = 0.5;
        double c_star = min_sparsity_constant(g, eps).c_star;
        double c = c_star == 0.0 ? 1.0 : c_star;
        for (double scale : {0.5, 2.0}) {
            DichotomyReport report;
            Cut cut = dichotomy_cut(g, eps, c, scale, plan, true, &report);
            if (cut.surplus() < report.bound) {
                violation("dichotomy surplus fell below the branch bound at graph " +
                          std::to_string(i));
                ok = false;
            }
        }
    }
    return ok;
}

// ---- criterion 10: CLI determinism ----
struct CliRun {
    int exit_code;
    std::string out;
};

fs::path g_work;

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run_cli(const std::string& args) {
    fs::path out = g_work / "stdout.txt";
    std::string cmd = std::string(SURPLUS_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + (g_work / "stderr.txt").string();
    int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
}

bool criterion10() {
    bool ok = true;
    g_work = fs::temp_directory_path() / "surplus_acceptance";
    fs::create_directories(g_work);
    auto at = [&](const std::string& name) { return (g_work / name).string(); };

    auto expect_same = [&](const std::string& what, const std::string& a, const std::string& b) {
        if (a != b) {
            violation(what + " was not byte-identical");
            return false;
        }
        return true;
    };

    write_edge_list_file(at("petersen.el"), testutil::petersen());

    for (int round = 0; round < 2; ++round) {
        run_cli("gen gnp --n 50 --p 0.2 --seed 9 --out " + at("g" + std::to_string(round) + ".el"));
    }
    ok &= expect_same("gen gnp", slurp(at("g0.el")), slurp(at("g1.el")));

    auto audit1 = run_cli("audit " + at("g0.el") + " --eps 0.5 --format csv");
    auto audit2 = run_cli("audit " + at("g0.el") + " --eps 0.5 --format csv");
    ok &= audit1.exit_code == 0;
    ok &= expect_same("audit csv", audit1.out, audit2.out);

    auto cut1 = run_cli("cut " + at("petersen.el") +
                        " --eps 1 --c 1 --trials 200 --seed 1 --out " + at("c1.cut"));
    std::string cut_file = slurp(at("c1.cut"));
    auto cut2 = run_cli("cut " + at("petersen.el") +
                        " --eps 1 --c 1 --trials 200 --seed 1 --out " + at("c1.cut"));
    auto cut4 = run_cli("cut " + at("petersen.el") +
                        " --eps 1 --c 1 --trials 200 --seed 1 --threads 4 --out " + at("c4.cut"));
    ok &= cut1.exit_code == 0 && cut4.exit_code == 0;
    ok &= expect_same("cut summary", cut1.out, cut2.out);
    ok &= expect_same("cut file", cut_file, slurp(at("c1.cut")));
    ok &= expect_same("cut file across thread counts", cut_file, slurp(at("c4.cut")));

    auto bounds1 = run_cli("bounds " + at("g0.el") + " --eps 1 --c auto --format csv");
    auto bounds2 = run_cli("bounds " + at("g0.el") + " --eps 1 --c auto --format csv");
    ok &= bounds1.exit_code == 0;
    ok &= expect_same("bounds csv", bounds1.out, bounds2.out);

    std::string sweep = " --family trianglefree --sizes 30,40,50,60,70 --eps 1 --c 1"
                        " --trials 10 --seed 4 --out ";
    auto exp1 = run_cli("experiment" + sweep + at("e1.csv"));
    auto exp2 = run_cli("experiment" + sweep + at("e2.csv"));
    ok &= exp1.exit_code == 0 && exp2.exit_code == 0;
    ok &= expect_same("experiment csv", slurp(at("e1.csv")), slurp(at("e2.csv")));
    return ok;
}

}  // namespace

int main() {
    struct Result {
        int number;
        const char* name;
        bool ok;
        double seconds;
        double budget;  // 0 = none stated
    };
    std::vector<Result> results;
    auto timed = [&](int number, const char* name, double budget, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        bool ok = fn();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget > 0.0 && secs > budget) ok = false;
        results.push_back({number, name, ok, secs, budget});
    };

    std::vector<Graph> corpus = build_corpus();

    timed(1, "embedding closed forms match materialized vectors", 30.0,
          [&] { return criterion1(corpus); });
    timed(2, "norm, inner-product and codegree-sum claims", 0.0, [&] { return criterion2(corpus); });
    timed(3, "expected surplus dominates the closed-form bound", 0.0,
          [&] { return criterion3(corpus); });
    timed(4, "oracle consistency on small instances", 0.0, [&] { return criterion4(corpus); });
    timed(5, "Monte Carlo expectation and shipped-seed rounding", 60.0, [&] { return criterion5(); });
    timed(6, "strongly regular tightness construction", 120.0, [&] { return criterion6(); });
    timed(7, "triangle-free sweep exponent floor", 180.0, [&] { return criterion7(); });
    timed(8, "degree power-sum floor", 0.0, [&] { return criterion8(corpus); });
    timed(9, "bound chain and dichotomy floor", 0.0, [&] { return criterion9(corpus); });
    timed(10, "CLI determinism", 0.0, [&] { return criterion10(); });

    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  %2d. %s (%.1fs%s)\n", r.ok ? "PASS" : "FAIL", r.number, r.name, r.seconds,
                    r.budget > 0 ? (" / budget " + std::to_string(int(r.budget)) + "s").c_str()
                                 : "");
        if (!r.ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
