#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "graph.hpp"

namespace surplus {

// Two-sided vertex partition. Side A is encoded 0, side B is 1.
struct Cut {
    std::vector<uint8_t> side;
    uint64_t crossing = 0;
    uint64_t m = 0;

    double surplus() const { return static_cast<double>(crossing) - static_cast<double>(m) / 2.0; }
};

Cut make_cut(const Graph& g, std::vector<uint8_t> side);
uint64_t count_crossing(const Graph& g, std::span<const uint8_t> side);

// Serialization: one line of n characters over {0,1} (vertex i at position
// i), then "crossing=<int> surplus=<decimal>".
std::string cut_to_string(const Cut& cut);

struct TrialPlan {
    uint64_t master_seed = 0;
    uint32_t trials = 1;

    // pure function of (master_seed, index); see derive_seed
    uint64_t trial_seed(uint32_t index) const;
};

// Exact expectation of the random-hyperplane cut size,
//   m/2 - (1/pi) Σ_{ij∈E} arcsin(<x^i,x^j> / (|x^i| |x^j|)).
double expected_cut_value(const Embedding& e);

// One rounding trial: z has independent standard normal coordinates (the
// direction is uniform; only projection signs matter), side A iff
// <x^v, z> >= 0.
Cut hyperplane_cut(const Embedding& e, uint64_t seed);

// First-improvement flips over a queue of dirty vertices: move any vertex
// with strictly more same-side than cross-side neighbors. At a local
// optimum every vertex has >= half its edges crossing, so crossing >= m/2.
Cut local_search_refine(const Graph& g, Cut cut);

struct TrialStats {
    uint64_t min_crossing = 0;
    uint64_t max_crossing = 0;
    double mean_crossing = 0.0;
    uint32_t best_trial = 0;
};

// Maximum-crossing cut over all trials (ties: lowest trial index). Trials
// may run on several threads; the per-trial seed scheme and the
// (crossing desc, trial asc) reduction make the result schedule-independent.
Cut best_of_trials(const Embedding& e, const TrialPlan& plan, bool refine,
                   TrialStats* stats = nullptr, uint32_t threads = 1);

// Greedy extension of a cut on G[subset] to all of g: remaining vertices
// are placed in order of decreasing placed-neighbor count (ties by vertex
// index) on the side with fewer placed neighbors (ties side A). Each
// placement cuts at least half its back-edges, so the surplus never drops.
Cut extend_cut(const Graph& g, std::span<const uint32_t> subset, const Cut& partial);

struct DichotomyReport {
    enum class Branch { degenerate, dense_core };
    Branch branch = Branch::degenerate;
    double threshold_d = 0.0;  // scale * m^{1/(2+tau)}
    uint32_t degeneracy = 0;
    double bound = 0.0;  // the branch's guaranteed surplus
    std::vector<uint32_t> core;
    double core_c_star = 0.0;  // audit of the rounded core at the given epsilon
    TrialStats stats;

    static const char* branch_name(Branch b) {
        return b == Branch::degenerate ? "degenerate" : "dense-core";
    }
};

// Degeneracy dichotomy: with d = scale * m^{1/(2+tau)}, either the graph is
// d-degenerate and is rounded whole (surplus floor delta1 * m / d^{1-tau}),
// or its ceil(d/2)-core is rounded and extended (floor
// delta2/4^{1+tau} * d^{1+2tau}). Requires g to be (c,epsilon)-sparse after
// isolated-vertex removal.
Cut dichotomy_cut(const Graph& g, double epsilon, double c, double scale, const TrialPlan& plan,
                  bool refine, DichotomyReport* report = nullptr);

}  // namespace surplus
