#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "blacklining/trace.hpp"

namespace blacklining {

// Finite probability mass function over integer atoms. Support is strictly
// increasing, probabilities are non-negative and sum to 1 within 1e-9.
struct Pmf {
    std::vector<std::int64_t> support;
    std::vector<double> probs;

    // Validates the invariants; throws InvalidParams on violation.
    static Pmf make(std::vector<std::int64_t> support, std::vector<double> probs);
};

struct FilterConfig {
    int lag = 1;
    double band_z = 1.96;        // band(n) = band_z / sqrt(n)
    std::size_t min_samples = 64;

    double band(std::size_t n) const { return band_z / std::sqrt(static_cast<double>(n)); }
    void validate() const;
};

struct FilterOutcome {
    enum class Kind { PassNormal, Forward };
    Kind kind = Kind::PassNormal;
    double r = 0.0;  // carried for stage-2 reuse either way

    bool forwarded() const { return kind == Kind::Forward; }
};

// Sample autocorrelation at the given lag:
//   r(l) = sum_{i<n-l} (x_i - m)(x_{i+l} - m) / sum_i (x_i - m)^2.
// Zero-variance input returns 1 by convention: a perfectly periodic series
// is maximal regularity, the strongest channel signature.
double autocorr(std::span<const double> series, int lag);

// Stage 1: a trace whose interval series shows no significant lag
// autocorrelation (|r| inside the white-noise band) is treated as
// attack-free; everything else is forwarded to classification.
FilterOutcome iid_filter(const TimingTrace& trace, const FilterConfig& config);

// Exact discrete convolution; the support is the Minkowski sum of supports.
Pmf convolve_pmf(const Pmf& p, const Pmf& q);

// Draw one atom according to the PMF using a uniform from the caller's rng.
std::int64_t sample_pmf(const Pmf& p, double uniform01);

}  // namespace blacklining
