#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace decarb {

struct EnsembleSummary {
  std::size_t n = 0;
  double mean = 0, median = 0, std_dev = 0, min = 0, max = 0, p25 = 0, p75 = 0;
};

EnsembleSummary summary_stats(std::span<const double> thetas);

// Per-statistic years-to-halve translation of a summary. Not itself a
// summary of years (halving_time is decreasing, so e.g. the min field holds
// the longest time). Statistics that are not positive rates map to NaN.
struct HalvingYears {
  double mean = 0, median = 0, std_dev = 0, min = 0, max = 0, p25 = 0, p75 = 0;
};

HalvingYears halving_translation(const EnsembleSummary& s, double u_max, double time_unit_years);

struct Histogram {
  std::vector<double> edges;        // n_bins + 1, spanning [min, max]
  std::vector<std::size_t> counts;  // n_bins, sums to n; rightmost bin closed
};

Histogram histogram(std::span<const double> values, int n_bins = 10);

enum class Statistic { mean, median, p25, p75, std_dev };

std::string_view statistic_name(Statistic s) noexcept;

// May reorder scratch (quantile statistics sort in place).
double evaluate_statistic(std::span<double> scratch, Statistic s);

struct BootstrapResult {
  Statistic statistic = Statistic::mean;
  double point = 0;  // statistic on the original sample
  double lo = 0;     // 5th percentile of the resample distribution
  double hi = 0;     // 95th percentile
  int n_resamples = 0;
  std::uint64_t seed = 0;
  double resample_mean = 0;
};

// Nonparametric bootstrap: n_resamples draws of size n with replacement.
// Resample k consumes substream(seed, k), so the result is fully determined
// by (values order, seed, n_resamples) whatever the thread count.
BootstrapResult bootstrap_ci(std::span<const double> values, Statistic statistic,
                             int n_resamples = 5000, std::uint64_t seed = 42, int threads = 1);

struct HalvingTableRow {
  Statistic statistic = Statistic::mean;
  double years = 0;
  double years_lo = 0;  // from the theta CI's hi endpoint (order flips)
  double years_hi = 0;
};

std::vector<HalvingTableRow> halving_time_table(const EnsembleSummary& summary,
                                                const std::vector<BootstrapResult>& cis,
                                                double u_max, double time_unit_years);

}  // namespace decarb
