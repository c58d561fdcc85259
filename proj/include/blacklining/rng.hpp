#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace blacklining {

// Seeded sampler used by the trace generators. All distributions are drawn
// through inverse-CDF (or Box-Muller) on top of mt19937_64 so that a given
// seed produces the same stream on every platform; the standard library's
// distribution objects are implementation-defined and would not.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double exponential(double mean) {
        return -mean * std::log1p(-uniform01());
    }

    // Pareto with minimum `scale` and tail index `shape`.
    double pareto(double scale, double shape) {
        return scale * std::pow(1.0 - uniform01(), -1.0 / shape);
    }

    // Geometric on {1, 2, ...} with the given mean.
    std::uint64_t geometric(double mean) {
        if (mean <= 1.0) return 1;
        const double p = 1.0 / mean;
        const double draw = std::ceil(std::log1p(-uniform01()) / std::log1p(-p));
        return draw < 1.0 ? 1 : static_cast<std::uint64_t>(draw);
    }

    // Standard normal via Box-Muller; two uniforms per draw, no cached state.
    double gaussian() {
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    int bit() { return uniform01() < 0.5 ? 1 : 0; }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace blacklining
