#include "embedding.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace surplus {

double pow_tau(double d, double tau) {
    if (tau == 0.0) return 1.0;
    if (tau == 0.5) return std::sqrt(d);
    return std::pow(d, tau);
}

EmbeddingParams EmbeddingParams::make(double epsilon, double c) {
    require(epsilon >= 0.0 && epsilon <= 1.0, Errc::invalid_argument,
            "epsilon must lie in [0, 1]");
    require(c > 0.0, Errc::invalid_argument, "c must be positive");
    EmbeddingParams p;
    p.epsilon = epsilon;
    p.c = c;
    p.tau = std::min(epsilon, 0.5);
    p.rho = std::min(c / 32.0, 1.0 / (32.0 * c));
    p.delta1 = p.rho / 16.0;
    p.delta2 = p.rho * p.rho / 8.0;
    return p;
}

std::string EmbeddingParams::to_key_value() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "epsilon=%.17g c=%.17g tau=%.17g rho=%.17g delta1=%.17g delta2=%.17g", epsilon,
                  c, tau, rho, delta1, delta2);
    return buf;
}

Embedding::Embedding(const Graph& g, EmbeddingParams params) : graph_(&g), params_(params) {
    uint32_t n = g.vertex_count();
    dtau_.resize(n);
    dtau_m1_.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t d = g.degree(i);
        require(d > 0, Errc::isolated_vertex,
                "vertex " + std::to_string(i) + " is isolated; the embedding needs d >= 1");
        dtau_[i] = pow_tau(double(d), params_.tau);
        dtau_m1_[i] = dtau_[i] / double(d);
    }
}

double Embedding::vertex_norm(uint32_t i) const {
    graph_->check_vertex(i);
    double n = graph_->vertex_count();
    double d = graph_->degree(i);
    double rho = params_.rho;
    double dtau = dtau_[i];
    double d2tau_m1 = dtau * dtau / d;  // d^{2tau-1}
    double sq = 1.0 + 2.0 * rho * dtau / n + rho * rho * d2tau_m1 * (1.0 + d / n - d * d / (n * n));
    return std::sqrt(sq);
}

double Embedding::edge_inner_product(uint32_t i, uint32_t j) const {
    require(graph_->has_edge(i, j), Errc::not_an_edge,
            "(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
    double n = graph_->vertex_count();
    double di = graph_->degree(i);
    double dj = graph_->degree(j);
    double dij = graph_->codegree(i, j);
    double rho = params_.rho;
    double cross = dij * (1.0 / n + 1.0 / di) * (1.0 / n + 1.0 / dj) - (n + di + dj) / (n * n);
    return -rho * (dtau_m1_[i] + dtau_m1_[j]) + rho * rho * dtau_[i] * dtau_[j] * cross;
}

void Embedding::project_all(std::span<const double> z, std::span<double> out) const {
    uint32_t n = graph_->vertex_count();
    require(z.size() == n && out.size() == n, Errc::length_mismatch,
            "projection input must have length n=" + std::to_string(n));
    double total = 0.0;
    for (double zi : z) total += zi;
    double rho = params_.rho;
    for (uint32_t i = 0; i < n; ++i) {
        double nb_sum = 0.0;
        for (uint32_t j : graph_->neighbors(i)) nb_sum += z[j];
        double background = rho * dtau_[i] / n;
        out[i] = background * total + z[i] - (rho * dtau_m1_[i] + background) * nb_sum;
    }
}

}  // namespace surplus
