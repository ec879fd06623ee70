#include "decarb/lognormal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "decarb/error.hpp"
#include "decarb/parallel.hpp"
#include "decarb/rng.hpp"
#include "decarb/stats.hpp"

namespace decarb {

LognormalFit lognormal_mle(std::span<const double> thetas) {
  if (thetas.size() < 2) fail(Errc::too_few_values, "lognormal MLE needs n >= 2");
  std::vector<double> logs;
  logs.reserve(thetas.size());
  for (double x : thetas) {
    if (!(x > 0.0)) fail(Errc::non_positive_value, "lognormal sample values must be positive");
    logs.push_back(std::log(x));
  }
  LognormalFit fit;
  fit.n = thetas.size();
  fit.mu = mean_of(logs);
  fit.s2 = biased_variance(logs);  // divisor n, the MLE convention
  return fit;
}

double lognormal_pdf(double x, const LognormalFit& fit) {
  if (!(x > 0.0)) fail(Errc::non_positive_value, "lognormal density needs x > 0");
  if (!(fit.s2 > 0.0)) fail(Errc::zero_variance, "lognormal density needs s2 > 0");
  const double s = std::sqrt(fit.s2);
  const double z = std::log(x) - fit.mu;
  return std::exp(-z * z / (2.0 * fit.s2)) / (x * s * std::sqrt(2.0 * std::numbers::pi));
}

LognormalStats lognormal_stats(const LognormalFit& fit) {
  if (fit.s2 < 0.0) fail(Errc::invalid_config, "s2 must be non-negative");
  const double s = std::sqrt(fit.s2);
  LognormalStats st;
  st.mean = std::exp(fit.mu + fit.s2 / 2.0);
  st.median = std::exp(fit.mu);
  st.variance = (std::exp(fit.s2) - 1.0) * std::exp(2.0 * fit.mu + fit.s2);
  st.p25 = std::exp(fit.mu + s * normal_quantile(0.25));
  st.p75 = std::exp(fit.mu + s * normal_quantile(0.75));
  return st;
}

BootstrapResult parametric_bootstrap(const LognormalFit& fit, std::size_t n, int n_resamples,
                                     Statistic statistic, std::uint64_t seed, int threads) {
  if (!(fit.s2 > 0.0)) fail(Errc::zero_variance, "parametric bootstrap needs s2 > 0");
  if (n < 2) fail(Errc::too_few_values, "parametric bootstrap needs n >= 2");
  if (n_resamples < 1000) fail(Errc::invalid_config, "bootstrap needs n_resamples >= 1000");

  const double s = std::sqrt(fit.s2);
  std::vector<double> stats(static_cast<std::size_t>(n_resamples));
  parallel_for(stats.size(), threads, [&](std::size_t k) {
    SplitMix64 rng = substream(seed, k);
    std::vector<double> sample(n);
    for (std::size_t i = 0; i < n; ++i) sample[i] = std::exp(fit.mu + s * rng.next_normal());
    stats[k] = evaluate_statistic(sample, statistic);
  });

  const LognormalStats closed = lognormal_stats(fit);
  BootstrapResult result;
  result.statistic = statistic;
  switch (statistic) {
    case Statistic::mean: result.point = closed.mean; break;
    case Statistic::median: result.point = closed.median; break;
    case Statistic::p25: result.point = closed.p25; break;
    case Statistic::p75: result.point = closed.p75; break;
    case Statistic::std_dev: result.point = std::sqrt(closed.variance); break;
  }
  result.n_resamples = n_resamples;
  result.seed = seed;
  result.resample_mean = mean_of(stats);
  std::sort(stats.begin(), stats.end());
  result.lo = quantile_sorted(stats, 0.05);
  result.hi = quantile_sorted(stats, 0.95);
  return result;
}

}  // namespace decarb
