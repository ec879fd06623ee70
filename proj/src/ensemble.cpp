#include "decarb/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "decarb/error.hpp"
#include "decarb/parallel.hpp"
#include "decarb/rng.hpp"
#include "decarb/speedfit.hpp"
#include "decarb/stats.hpp"

namespace decarb {

EnsembleSummary summary_stats(std::span<const double> thetas) {
  if (thetas.size() < 2) fail(Errc::too_few_values, "summary needs n >= 2");
  std::vector<double> sorted(thetas.begin(), thetas.end());
  std::sort(sorted.begin(), sorted.end());

  EnsembleSummary s;
  s.n = thetas.size();
  s.mean = mean_of(thetas);
  s.std_dev = sample_std(thetas);
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = quantile_sorted(sorted, 0.5);
  s.p25 = quantile_sorted(sorted, 0.25);
  s.p75 = quantile_sorted(sorted, 0.75);
  return s;
}

HalvingYears halving_translation(const EnsembleSummary& s, double u_max, double time_unit_years) {
  auto years = [&](double theta) {
    return theta > 0.0 ? halving_time(theta, u_max, time_unit_years)
                       : std::numeric_limits<double>::quiet_NaN();
  };
  HalvingYears h;
  h.mean = years(s.mean);
  h.median = years(s.median);
  h.std_dev = years(s.std_dev);
  h.min = years(s.min);
  h.max = years(s.max);
  h.p25 = years(s.p25);
  h.p75 = years(s.p75);
  return h;
}

Histogram histogram(std::span<const double> values, int n_bins) {
  if (values.empty()) fail(Errc::too_few_values, "histogram of an empty sample");
  if (n_bins < 1) fail(Errc::invalid_config, "histogram needs n_bins >= 1");

  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *min_it, hi = *max_it;

  Histogram h;
  h.edges.resize(std::size_t(n_bins) + 1);
  h.counts.assign(std::size_t(n_bins), 0);
  const double width = (hi - lo) / double(n_bins);
  for (int i = 0; i <= n_bins; ++i) h.edges[std::size_t(i)] = lo + width * double(i);
  h.edges.back() = hi;  // exact upper edge, rightmost bin closed

  if (width <= 0.0) {
    h.counts[0] = values.size();
    return h;
  }
  for (double v : values) {
    auto idx = static_cast<long>((v - lo) / width);
    idx = std::clamp<long>(idx, 0, n_bins - 1);
    ++h.counts[std::size_t(idx)];
  }
  return h;
}

std::string_view statistic_name(Statistic s) noexcept {
  switch (s) {
    case Statistic::mean: return "mean";
    case Statistic::median: return "median";
    case Statistic::p25: return "p25";
    case Statistic::p75: return "p75";
    case Statistic::std_dev: return "std";
  }
  return "?";
}

double evaluate_statistic(std::span<double> scratch, Statistic s) {
  switch (s) {
    case Statistic::mean: return mean_of(scratch);
    case Statistic::std_dev: return sample_std(scratch);
    default: break;
  }
  std::sort(scratch.begin(), scratch.end());
  switch (s) {
    case Statistic::median: return quantile_sorted(scratch, 0.5);
    case Statistic::p25: return quantile_sorted(scratch, 0.25);
    case Statistic::p75: return quantile_sorted(scratch, 0.75);
    default: break;
  }
  fail(Errc::invalid_config, "unknown statistic");
}

BootstrapResult bootstrap_ci(std::span<const double> values, Statistic statistic, int n_resamples,
                             std::uint64_t seed, int threads) {
  if (values.size() < 2) fail(Errc::too_few_values, "bootstrap needs n >= 2");
  if (n_resamples < 1000) fail(Errc::invalid_config, "bootstrap needs n_resamples >= 1000");

  const std::size_t n = values.size();
  std::vector<double> stats(static_cast<std::size_t>(n_resamples));
  parallel_for(stats.size(), threads, [&](std::size_t k) {
    SplitMix64 rng = substream(seed, k);
    std::vector<double> resample(n);
    for (std::size_t i = 0; i < n; ++i) resample[i] = values[rng.next_index(n)];
    stats[k] = evaluate_statistic(resample, statistic);
  });

  std::vector<double> point_scratch(values.begin(), values.end());

  BootstrapResult result;
  result.statistic = statistic;
  result.point = evaluate_statistic(point_scratch, statistic);
  result.n_resamples = n_resamples;
  result.seed = seed;
  result.resample_mean = mean_of(stats);
  std::sort(stats.begin(), stats.end());
  result.lo = quantile_sorted(stats, 0.05);
  result.hi = quantile_sorted(stats, 0.95);
  return result;
}

std::vector<HalvingTableRow> halving_time_table(const EnsembleSummary& summary,
                                                const std::vector<BootstrapResult>& cis,
                                                double u_max, double time_unit_years) {
  auto point_of = [&](Statistic s) {
    switch (s) {
      case Statistic::mean: return summary.mean;
      case Statistic::median: return summary.median;
      case Statistic::p25: return summary.p25;
      case Statistic::p75: return summary.p75;
      case Statistic::std_dev: return summary.std_dev;
    }
    return summary.mean;
  };
  auto years = [&](double theta) {
    return theta > 0.0 ? halving_time(theta, u_max, time_unit_years)
                       : std::numeric_limits<double>::quiet_NaN();
  };

  std::vector<HalvingTableRow> rows;
  rows.reserve(cis.size());
  for (const auto& ci : cis) {
    HalvingTableRow row;
    row.statistic = ci.statistic;
    row.years = years(point_of(ci.statistic));
    // larger theta halves sooner, so the endpoints swap
    row.years_lo = years(ci.hi);
    row.years_hi = years(ci.lo);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace decarb
