#pragma once

// Self-contained seeded RNG so that experiment outputs are reproducible
// byte-for-byte across platforms and across parallel schedules. Streams are
// derived from (seed, tag), never from call order.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace xbar {

/// splitmix64-based generator with Box-Muller normals.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Independent stream for a named sub-experiment.
    static Rng stream(uint64_t seed, std::string_view tag) {
        uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char ch : tag) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        return Rng(seed ^ h);
    }
    static Rng stream(uint64_t seed, uint64_t index) {
        return Rng(seed ^ (0x9e3779b97f4a7c15ull + index * 0xbf58476d1ce4e5b9ull));
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return std::ldexp(static_cast<double>(next() >> 11), -53); }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace xbar
