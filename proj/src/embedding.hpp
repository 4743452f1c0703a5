#pragma once

#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace surplus {

// Constants governing the degree-weighted vector construction. All are
// derived from (epsilon, c):
//   tau    = min{epsilon, 1/2}
//   rho    = min{c/32, 1/(32c)}
//   delta1 = rho/16,  delta2 = rho^2/8
struct EmbeddingParams {
    double epsilon;
    double c;
    double tau;
    double rho;
    double delta1;
    double delta2;

    static EmbeddingParams make(double epsilon, double c);
    std::string to_key_value() const;
};

// Virtual embedding of a graph into R^n: one vector per vertex,
//   coord j of x^i = 1 + rho d_i^tau / n   if j == i
//                  = -rho d_i^{tau-1}      if j in N(i)
//                  = rho d_i^tau / n       otherwise.
// Vectors are never materialized. Algebraically
//   x^i = (rho d_i^tau / n) * 1  +  e_i  -  (rho d_i^{tau-1} + rho d_i^tau / n) * chi_{N(i)},
// which makes every projection O(d_i) and a full round O(n + m); a unit
// test checks this decomposition against the literal definition.
class Embedding {
public:
    // Requires min degree >= 1 (d^{tau-1} is undefined at d = 0).
    Embedding(const Graph& g, EmbeddingParams params);

    const Graph& graph() const { return *graph_; }
    const EmbeddingParams& params() const { return params_; }

    // Closed-form |x^i| = sqrt(1 + 2 rho d^tau/n + rho^2 d^{2tau-1} (1 + d/n - d^2/n^2)),
    // always in [1, sqrt(2)].
    double vertex_norm(uint32_t i) const;

    // Exact <x^i, x^j> for an edge ij:
    //   -rho(d_i^{tau-1} + d_j^{tau-1})
    //   + rho^2 (d_i d_j)^tau [ d_ij (1/n + 1/d_i)(1/n + 1/d_j) - (n + d_i + d_j)/n^2 ]
    double edge_inner_product(uint32_t i, uint32_t j) const;

    // out[i] = <x^i, z> for all i, in O(n + m) total.
    void project_all(std::span<const double> z, std::span<double> out) const;

    double degree_pow_tau(uint32_t i) const { return dtau_[i]; }
    double degree_pow_tau_minus1(uint32_t i) const { return dtau_m1_[i]; }

private:
    const Graph* graph_;
    EmbeddingParams params_;
    std::vector<double> dtau_;     // d_i^tau
    std::vector<double> dtau_m1_;  // d_i^{tau-1}
};

// d^tau with the accuracy-friendly special cases tau = 0 and tau = 1/2.
double pow_tau(double d, double tau);

}  // namespace surplus
