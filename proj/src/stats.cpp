#include "decarb/stats.hpp"

#include <cmath>
#include <cstddef>

#include "decarb/error.hpp"

namespace decarb {

double mean_of(std::span<const double> xs) {
  if (xs.empty()) fail(Errc::too_few_values, "mean of an empty sample");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / double(xs.size());
}

double sample_std(std::span<const double> xs) {
  if (xs.size() < 2) fail(Errc::too_few_values, "sample std needs n >= 2");
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / double(xs.size() - 1));
}

double biased_variance(std::span<const double> xs) {
  if (xs.empty()) fail(Errc::too_few_values, "variance of an empty sample");
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / double(xs.size());
}

double quantile_sorted(std::span<const double> xs, double q) {
  if (xs.empty()) fail(Errc::too_few_values, "quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) fail(Errc::invalid_config, "quantile level outside [0,1]");
  const std::size_t n = xs.size();
  const double h = double(n - 1) * q;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return xs[n - 1];
  const double frac = h - double(lo);
  return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

}  // namespace decarb
