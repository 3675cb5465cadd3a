#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace netdrift {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded random source. The mt19937_64 engine is fully specified by the
/// standard; the derived draws below are implemented here (rather than with
/// std::*_distribution, whose output is implementation-defined) so that a
/// given seed produces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform_double() * (hi - lo);
    }

    /// Uniform in [0, n). Unbiased via rejection; n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// One Gaussian draw via Box-Muller (cosine branch; the sine half is
    /// discarded so the call consumes exactly two engine outputs).
    double normal(double mean, double stddev) {
        const double u1 = 1.0 - uniform_double();  // (0, 1]
        const double u2 = uniform_double();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        return mean + stddev * (radius * std::cos(two_pi * u2));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netdrift
