#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace eegnlp {

// Deterministic sampling utilities. The mt19937_64 engine is fully specified
// by the standard; the std::*_distribution classes are not, so the
// distributions are implemented here to keep outputs identical across
// compilers and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform on [0, 1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer on [0, n)
    std::uint64_t uniform_index(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    double normal() {
        // Box-Muller, cached second value
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // log-normal parameterized by the median of the resulting distribution
    double lognormal_median(double median, double sigma) {
        return median * std::exp(sigma * normal());
    }

    bool bernoulli(double p) { return uniform() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Derive an independent stream seed from a base seed and stream labels
// (splitmix64 finalizer). Used so that per-sentence / per-epoch / per-fold
// streams do not overlap regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(base);
    s = mix(s ^ mix(a + 0x1000));
    s = mix(s ^ mix(b + 0x2000));
    s = mix(s ^ mix(c + 0x3000));
    return s;
}

inline std::uint64_t hash_str(const std::string& s) {
    // FNV-1a
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace eegnlp
