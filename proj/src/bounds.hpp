#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace surplus {

// Universal surplus floor (sqrt(8m+1) - 1)/8; tight on odd complete graphs.
double edwards_bound(uint64_t m);

// delta1 Σ_i d_i^tau + delta2 Σ_{ij∈E} (d_i d_j)^tau / n for a
// (c,epsilon)-sparse graph with no isolated vertices.
double embedding_lower_bound(const Graph& g, double epsilon, double c);

// delta1 * m / d^{1-tau} with d the exact degeneracy.
double degeneracy_bound(const Graph& g, double epsilon, double c);

// delta2 / 4^{1+tau} * d^{1+2tau} with d = 2m/n the average degree.
double avg_degree_bound(const Graph& g, double epsilon, double c);

// -lambda_min * n / 4 for regular graphs.
double eigen_upper_bound(const Graph& g, double eigen_tol = 1e-8);

struct AppendixSumBound {
    double bound = 0.0;  // C t^{1-tau} (m - c t^alpha)^tau, 0 when degenerate
    uint64_t t = 0;      // floor((m/2c)^{1/alpha})
    bool hypothesis_checked = false;  // e(top-t-degree prefix) <= c t^alpha
};

// Degree-power-sum floor: whenever the prefix hypothesis verifies,
// Σ d_i^tau >= bound with C^{-1} = (1-tau)^{1-tau} tau^tau. Only the
// top-degree prefix is checked (testing all subsets is exponential and
// only the prefix enters the derivation).
AppendixSumBound appendix_sum_bound(const Graph& g, double c, double alpha, double tau);

struct PredictedExponents {
    double chi3;                  // (1 + 2 tau) / (2 + tau)
    std::optional<double> chi2;   // tau + (1 - tau) / (2 - alpha) when alpha given
};
PredictedExponents predicted_exponents(double epsilon, std::optional<double> alpha);

struct BoundEntry {
    enum class Kind { lower, upper, exact };
    std::string name;
    Kind kind;
    double value;
    std::string source;
    std::string note;

    static const char* kind_name(Kind k);
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    uint32_t n = 0;
    uint64_t m = 0;
    uint32_t degeneracy = 0;
    double avg_degree = 0.0;
    bool regular = false;
    uint32_t isolated_removed = 0;
    std::vector<std::string> notes;

    std::string to_csv() const;
    std::string to_table() const;
};

// Every applicable bound for the graph (isolated vertices stripped first),
// with the exact oracle value when n <= 24; internally consistency-checked.
BoundReport full_report(const Graph& g, double epsilon, double c);

}  // namespace surplus
