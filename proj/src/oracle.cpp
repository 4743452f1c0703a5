#include "oracle.hpp"

#include <bit>
#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace surplus {

namespace {

// lexicographic order on the side strings s_0 s_1 ... s_{n-1}
bool lex_smaller(uint32_t a, uint32_t b, uint32_t n) {
    for (uint32_t v = 0; v < n; ++v) {
        uint32_t abit = (a >> v) & 1;
        uint32_t bbit = (b >> v) & 1;
        if (abit != bbit) return abit < bbit;
    }
    return false;
}

}  // namespace

ExactMaxcut exact_maxcut(const Graph& g) {
    uint32_t n = g.vertex_count();
    require(n >= 1, Errc::invalid_argument, "graph must have at least one vertex");
    require(n <= kExactMaxcutCap, Errc::too_large,
            "exact maxcut capped at n <= " + std::to_string(kExactMaxcutCap) + ", got n=" +
                std::to_string(n));

    std::vector<uint32_t> cross(n, 0);  // opposite-side neighbor counts
    uint32_t mask = 0;                  // bit v = side of vertex v (vertex 0 stays 0)
    uint64_t crossing = 0;
    uint64_t best = 0;
    uint32_t best_mask = 0;

    uint64_t steps = n >= 1 ? (uint64_t{1} << (n - 1)) : 1;
    for (uint64_t i = 1; i < steps; ++i) {
        uint32_t v = 1 + static_cast<uint32_t>(std::countr_zero(i));  // Gray-code flip
        crossing += static_cast<int64_t>(g.degree(v)) - 2 * static_cast<int64_t>(cross[v]);
        mask ^= uint32_t{1} << v;
        cross[v] = g.degree(v) - cross[v];
        for (uint32_t w : g.neighbors(v)) {
            bool crossing_now = ((mask >> v) & 1) != ((mask >> w) & 1);
            cross[w] += crossing_now ? 1 : -1;
        }
        if (crossing > best || (crossing == best && lex_smaller(mask, best_mask, n))) {
            best = crossing;
            best_mask = mask;
        }
    }

    ExactMaxcut result;
    result.mc = best;
    std::vector<uint8_t> side(n);
    for (uint32_t v = 0; v < n; ++v) side[v] = (best_mask >> v) & 1;
    result.witness = make_cut(g, std::move(side));
    require(result.witness.crossing == best, Errc::internal, "witness recount mismatch");
    return result;
}

double exact_surplus(const Graph& g) {
    return static_cast<double>(exact_maxcut(g).mc) - static_cast<double>(g.edge_count()) / 2.0;
}

double smallest_eigenvalue(const Graph& g, double tol) {
    uint32_t n = g.vertex_count();
    require(n >= 1, Errc::invalid_argument, "graph must have at least one vertex");
    require(tol > 0.0, Errc::invalid_argument, "tol must be positive");
    if (g.edge_count() == 0) return 0.0;

    double shift = g.max_degree();
    std::vector<double> x(n), y(n);

    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (uint32_t v = 0; v < n; ++v) {
            double acc = shift * in[v];
            for (uint32_t w : g.neighbors(v)) acc -= in[w];
            out[v] = acc;
        }
    };
    auto normalize = [&](std::vector<double>& vec) {
        double norm = 0.0;
        for (double value : vec) norm += value * value;
        norm = std::sqrt(norm);
        for (double& value : vec) value /= norm;
        return norm;
    };

    constexpr uint64_t kIterationCap = 1'000'000;
    constexpr int kRestarts = 4;
    uint64_t used = 0;
    double best_theta = -1.0;
    bool converged = false;

    for (int attempt = 0; attempt < kRestarts && used < kIterationCap; ++attempt) {
        SplitMix64 rng(0x5EEDULL + attempt);
        for (double& value : x) value = rng.uniform() - 0.5;
        normalize(x);
        double theta = 0.0;
        while (used < kIterationCap) {
            ++used;
            apply(x, y);
            theta = 0.0;
            for (uint32_t v = 0; v < n; ++v) theta += x[v] * y[v];
            double resid = 0.0;
            for (uint32_t v = 0; v < n; ++v) {
                double r = y[v] - theta * x[v];
                resid += r * r;
            }
            resid = std::sqrt(resid);
            if (normalize(y) == 0.0) break;  // x was in the kernel; restart
            x.swap(y);
            if (resid <= tol / 2.0) {
                converged = true;
                break;
            }
        }
        best_theta = std::max(best_theta, theta);
        if (converged && attempt >= 1) break;  // two agreeing deterministic starts
    }
    require(converged, Errc::no_convergence,
            "power iteration did not converge within the iteration cap");
    return shift - best_theta;
}

}  // namespace surplus
