#pragma once

#include <span>
#include <vector>

#include "blacklining/trace.hpp"

namespace blacklining {

// Min-max normalized copy of a series. `degenerate` marks constant input,
// which maps to all zeros instead of dividing by a zero range.
struct NormalizedSeries {
    std::vector<double> values;
    double original_min = 0.0;
    double original_max = 0.0;
    bool degenerate = false;
};

// Distances between consecutive points of a normalized series embedded in
// the (index-fraction, value) plane; length n-1 for an n-point input.
struct DistanceSeries {
    std::vector<double> values;
};

NormalizedSeries normalize(std::span<const double> series);

IntervalSeries first_difference(const TimingTrace& trace);

DistanceSeries euclidean_distances(const NormalizedSeries& series);

}  // namespace blacklining
