#pragma once

#include <span>

namespace decarb {

double mean_of(std::span<const double> xs);

// divisor n-1
double sample_std(std::span<const double> xs);

// divisor n
double biased_variance(std::span<const double> xs);

// Linear interpolation between order statistics at position 1 + (n-1)q
// (1-indexed). xs must be sorted ascending.
double quantile_sorted(std::span<const double> xs, double q);

}  // namespace decarb
