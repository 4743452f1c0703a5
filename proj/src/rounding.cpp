#include "rounding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <deque>
#include <queue>
#include <thread>

#include "error.hpp"
#include "rng.hpp"
#include "sparsity.hpp"

namespace surplus {

uint64_t count_crossing(const Graph& g, std::span<const uint8_t> side) {
    uint64_t crossing = 0;
    for (auto [u, v] : g.edges()) crossing += side[u] != side[v];
    return crossing;
}

Cut make_cut(const Graph& g, std::vector<uint8_t> side) {
    require(side.size() == g.vertex_count(), Errc::length_mismatch,
            "side assignment length must equal n");
    Cut cut;
    cut.crossing = count_crossing(g, side);
    cut.side = std::move(side);
    cut.m = g.edge_count();
    return cut;
}

std::string cut_to_string(const Cut& cut) {
    std::string out;
    out.reserve(cut.side.size() + 48);
    for (uint8_t s : cut.side) out.push_back(s ? '1' : '0');
    char buf[64];
    std::snprintf(buf, sizeof(buf), "\ncrossing=%llu surplus=%.1f\n",
                  static_cast<unsigned long long>(cut.crossing), cut.surplus());
    out += buf;
    return out;
}

uint64_t TrialPlan::trial_seed(uint32_t index) const { return derive_seed(master_seed, index); }

double expected_cut_value(const Embedding& e) {
    const Graph& g = e.graph();
    double angle_sum = 0.0;
    for (auto [u, v] : g.edges()) {
        double ratio = e.edge_inner_product(u, v) / (e.vertex_norm(u) * e.vertex_norm(v));
        require(std::abs(ratio) <= 1.0 + 1e-12, Errc::arcsin_domain,
                "normalized inner product outside [-1, 1] at edge (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
        angle_sum += std::asin(std::clamp(ratio, -1.0, 1.0));
    }
    return static_cast<double>(g.edge_count()) / 2.0 - angle_sum / M_PI;
}

Cut hyperplane_cut(const Embedding& e, uint64_t seed) {
    const Graph& g = e.graph();
    uint32_t n = g.vertex_count();
    SplitMix64 rng(seed);
    std::vector<double> z(n);
    for (double& zi : z) zi = rng.gaussian();
    std::vector<double> proj(n);
    e.project_all(z, proj);
    std::vector<uint8_t> side(n);
    for (uint32_t v = 0; v < n; ++v) side[v] = proj[v] >= 0.0 ? 0 : 1;
    return make_cut(g, std::move(side));
}

Cut local_search_refine(const Graph& g, Cut cut) {
    uint32_t n = g.vertex_count();
    require(cut.side.size() == n, Errc::invalid_argument, "cut does not match graph");
    std::vector<uint32_t> cross(n, 0);
    for (auto [u, v] : g.edges())
        if (cut.side[u] != cut.side[v]) {
            ++cross[u];
            ++cross[v];
        }
    std::deque<uint32_t> dirty;
    std::vector<uint8_t> queued(n, 1);
    for (uint32_t v = 0; v < n; ++v) dirty.push_back(v);

    while (!dirty.empty()) {
        uint32_t v = dirty.front();
        dirty.pop_front();
        queued[v] = 0;
        uint32_t d = g.degree(v);
        if (2 * cross[v] >= d) continue;  // no strict majority on v's own side
        cut.crossing += d - 2 * cross[v];
        cut.side[v] ^= 1;
        cross[v] = d - cross[v];
        for (uint32_t w : g.neighbors(v)) {
            if (cut.side[w] != cut.side[v])
                ++cross[w];
            else
                --cross[w];
            if (!queued[w]) {
                queued[w] = 1;
                dirty.push_back(w);
            }
        }
    }
    return cut;
}

namespace {

struct TrialOutcome {
    uint64_t crossing;
    uint32_t trial;

    bool better_than(const TrialOutcome& other) const {
        return crossing > other.crossing || (crossing == other.crossing && trial < other.trial);
    }
};

}  // namespace

Cut best_of_trials(const Embedding& e, const TrialPlan& plan, bool refine, TrialStats* stats,
                   uint32_t threads) {
    require(plan.trials >= 1, Errc::invalid_argument, "need at least one trial");
    const Graph& g = e.graph();
    uint32_t trials = plan.trials;
    threads = std::max<uint32_t>(1, std::min(threads, trials));

    struct Partial {
        TrialOutcome best{0, 0};
        uint64_t min_c = UINT64_MAX;
        uint64_t max_c = 0;
        uint64_t sum_c = 0;
        bool any = false;
    };
    std::vector<Partial> parts(threads);

    auto run_range = [&](uint32_t lo, uint32_t hi, Partial& part) {
        for (uint32_t t = lo; t < hi; ++t) {
            Cut cut = hyperplane_cut(e, plan.trial_seed(t));
            if (refine) cut = local_search_refine(g, std::move(cut));
            part.min_c = std::min(part.min_c, cut.crossing);
            part.max_c = std::max(part.max_c, cut.crossing);
            part.sum_c += cut.crossing;
            TrialOutcome outcome{cut.crossing, t};
            if (!part.any || outcome.better_than(part.best)) {
                part.best = outcome;
                part.any = true;
            }
        }
    };

    if (threads == 1) {
        run_range(0, trials, parts[0]);
    } else {
        std::vector<std::thread> pool;
        uint32_t chunk = (trials + threads - 1) / threads;
        for (uint32_t k = 0; k < threads; ++k) {
            uint32_t lo = k * chunk;
            uint32_t hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi, std::ref(parts[k]));
        }
        for (auto& th : pool) th.join();
    }

    Partial total;
    for (const auto& part : parts) {
        if (!part.any) continue;
        total.min_c = std::min(total.min_c, part.min_c);
        total.max_c = std::max(total.max_c, part.max_c);
        total.sum_c += part.sum_c;
        if (!total.any || part.best.better_than(total.best)) {
            total.best = part.best;
            total.any = true;
        }
    }
    if (stats) {
        stats->min_crossing = total.min_c;
        stats->max_crossing = total.max_c;
        stats->mean_crossing = static_cast<double>(total.sum_c) / trials;
        stats->best_trial = total.best.trial;
    }

    // replay the winning trial; individual cuts are not kept alive
    Cut best = hyperplane_cut(e, plan.trial_seed(total.best.trial));
    if (refine) best = local_search_refine(g, std::move(best));
    require(best.crossing == total.best.crossing, Errc::internal, "trial replay diverged");
    return best;
}

Cut extend_cut(const Graph& g, std::span<const uint32_t> subset, const Cut& partial) {
    auto induced = g.induced_subgraph(subset);
    const Graph& sub = induced.graph;
    require(partial.side.size() == sub.vertex_count(), Errc::invalid_argument,
            "partial cut does not match the induced subgraph");
    require(partial.m == sub.edge_count() &&
                partial.crossing == count_crossing(sub, partial.side),
            Errc::invalid_argument, "partial cut is inconsistent with the induced subgraph");

    uint32_t n = g.vertex_count();
    std::vector<uint8_t> side(n, 0);
    std::vector<uint8_t> placed(n, 0);
    for (uint32_t i = 0; i < induced.to_original.size(); ++i) {
        uint32_t v = induced.to_original[i];
        side[v] = partial.side[i];
        placed[v] = 1;
    }

    // placed-neighbor counts per side, updated as vertices land
    std::vector<std::array<uint32_t, 2>> nb(n, {0, 0});
    for (uint32_t v = 0; v < n; ++v)
        if (placed[v])
            for (uint32_t w : g.neighbors(v))
                if (!placed[w]) ++nb[w][side[v]];

    // lazy max-heap on (placed-degree desc, vertex asc)
    using Entry = std::pair<uint32_t, uint32_t>;  // (count, vertex)
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    uint32_t remaining = 0;
    for (uint32_t v = 0; v < n; ++v)
        if (!placed[v]) {
            heap.emplace(nb[v][0] + nb[v][1], v);
            ++remaining;
        }
    while (remaining > 0) {
        auto [count, v] = heap.top();
        heap.pop();
        if (placed[v] || count != nb[v][0] + nb[v][1]) continue;  // stale entry
        side[v] = nb[v][1] < nb[v][0] ? 1 : 0;  // fewer placed neighbors; tie -> side A
        placed[v] = 1;
        --remaining;
        for (uint32_t w : g.neighbors(v))
            if (!placed[w]) {
                ++nb[w][side[v]];
                heap.emplace(nb[w][0] + nb[w][1], w);
            }
    }
    return make_cut(g, std::move(side));
}

Cut dichotomy_cut(const Graph& g, double epsilon, double c, double scale, const TrialPlan& plan,
                  bool refine, DichotomyReport* report) {
    require(scale > 0.0, Errc::invalid_argument, "scale must be positive");
    auto stripped = g.remove_isolated();
    const Graph& h = stripped.graph;
    auto check = is_sparse(h, c, epsilon);
    if (!check.sparse)
        fail(Errc::not_sparse,
             "graph is not sparse at the given (c, epsilon); witness vertex " +
                 std::to_string(stripped.to_original[*check.witness]));

    EmbeddingParams params = EmbeddingParams::make(epsilon, c);
    double m = static_cast<double>(h.edge_count());
    double d = scale * std::pow(m, 1.0 / (2.0 + params.tau));
    uint32_t degeneracy = h.degeneracy();

    DichotomyReport rep;
    rep.threshold_d = d;
    rep.degeneracy = degeneracy;

    Cut on_h;
    if (degeneracy <= d) {
        rep.branch = DichotomyReport::Branch::degenerate;
        rep.bound = m > 0 ? params.delta1 * m / std::pow(d, 1.0 - params.tau) : 0.0;
        if (h.edge_count() == 0) {
            on_h = make_cut(h, std::vector<uint8_t>(h.vertex_count(), 0));
        } else {
            Embedding e(h, params);
            on_h = best_of_trials(e, plan, refine, &rep.stats);
        }
    } else {
        rep.branch = DichotomyReport::Branch::dense_core;
        rep.bound = params.delta2 / std::pow(4.0, 1.0 + params.tau) *
                    std::pow(d, 1.0 + 2.0 * params.tau);
        auto threshold = static_cast<uint32_t>(std::ceil(d / 2.0));
        rep.core = h.min_degree_peel(threshold);
        require(!rep.core.empty(), Errc::internal,
                "core unexpectedly empty below the degeneracy threshold");
        auto core_graph = h.induced_subgraph(rep.core);
        rep.core_c_star = min_sparsity_constant(core_graph.graph, epsilon).c_star;
        Embedding e(core_graph.graph, params);
        Cut core_cut = best_of_trials(e, plan, refine, &rep.stats);
        on_h = extend_cut(h, rep.core, core_cut);
    }

    // lift back over any stripped isolated vertices (they touch no edges)
    Cut result;
    if (h.vertex_count() == g.vertex_count()) {
        result = std::move(on_h);
    } else {
        std::vector<uint8_t> side(g.vertex_count(), 0);
        for (uint32_t i = 0; i < stripped.to_original.size(); ++i)
            side[stripped.to_original[i]] = on_h.side[i];
        result = make_cut(g, std::move(side));
    }
    if (report) {
        if (!rep.core.empty())
            for (uint32_t& v : rep.core) v = stripped.to_original[v];
        *report = std::move(rep);
    }
    return result;
}

}  // namespace surplus
