#pragma once

#include <cmath>
#include <cstdint>

namespace surplus {

// SplitMix64 (Steele/Lea/Flood). Fixed algorithm so seeded outputs are
// identical across platforms and standard-library versions.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // uniform integer in [0, bound) via multiply-shift
    uint64_t bounded(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
    }

    // standard normal via Box-Muller; pairs generated, second value cached
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_pos();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Splittable per-trial seed: the (index+1)-th raw output of SplitMix64
// seeded with master. Pure function of (master, index), so any parallel
// schedule sees the same per-trial streams.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace surplus
