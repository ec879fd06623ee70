#include "decarb/speedfit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "decarb/error.hpp"

namespace decarb {

namespace {

void check_fit_config(const FitConfig& c) {
  if (!(c.theta_min > 0.0) || !(c.theta_min < c.theta_max))
    fail(Errc::invalid_config, "need 0 < theta_min < theta_max");
  if (c.grid_points < 10) fail(Errc::invalid_config, "grid_points must be >= 10");
  if (!(c.time_unit_years > 0.0)) fail(Errc::invalid_config, "time_unit_years must be positive");
  if (!(c.refine_tol > 0.0)) fail(Errc::invalid_config, "refine_tol must be positive");
}

// Relative threshold below which a cumulative-emissions point is skipped in
// the objective (|1 - CE_hat/CE| blows up as CE crosses zero).
constexpr double kCumulativeEpsRel = 1e-9;

// Everything about the objective that does not depend on theta.
struct Objective {
  std::vector<double> tau;    // (year - t0) / time_unit_years
  std::vector<double> pe;     // primary energy
  std::vector<double> gaps;   // year deltas, gaps[k] = years[k] - years[k-1]
  std::vector<double> ce;     // data cumulative emissions, ce[0] = 0
  std::vector<char> included; // per index >= 1
  std::size_t n_included = 0;
  double sigma0 = 0;
  double u_max = 0;

  double operator()(double theta) const {
    double e_prev = sigma0 * 1.0 * pe[0] / kKgPerKwhFactor;  // u(t0) = 0
    double cum = 0.0;
    double sum = 0.0;
    for (std::size_t k = 1; k < tau.size(); ++k) {
      const double u = u_max * (1.0 - std::exp(-theta * tau[k]));
      const double e_k = sigma0 * (1.0 - u) * pe[k] / kKgPerKwhFactor;
      cum += gaps[k] * 0.5 * (e_prev + e_k);
      if (included[k]) sum += std::abs(1.0 - cum / ce[k]);
      e_prev = e_k;
    }
    return sum / double(n_included);
  }
};

Objective make_objective(const ScenarioRecord& record, double u_max, double sigma0,
                         const FitConfig& config) {
  const auto& years = record.emissions_ffi.years;
  const std::size_t n = years.size();
  Objective obj;
  obj.sigma0 = sigma0;
  obj.u_max = u_max;
  obj.tau.resize(n);
  obj.gaps.resize(n);
  obj.pe = record.primary_energy.values;
  for (std::size_t k = 0; k < n; ++k) {
    obj.tau[k] = double(years[k] - years.front()) / config.time_unit_years;
    obj.gaps[k] = k == 0 ? 0.0 : double(years[k] - years[k - 1]);
  }

  const AnnualSeries ce = cumulative_emissions(record.emissions_ffi);
  obj.ce = ce.values;
  double ce_max = 0.0;
  for (double v : obj.ce) ce_max = std::max(ce_max, std::abs(v));
  const double eps = kCumulativeEpsRel * ce_max;

  obj.included.assign(n, 0);
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(obj.ce[k]) >= eps && eps > 0.0) {
      obj.included[k] = 1;
      ++obj.n_included;
    }
  const std::size_t excluded = (n - 1) - obj.n_included;
  if (2 * excluded > n - 1)
    fail(Errc::degenerate_cumulative,
         record.key.model + "/" + record.key.raw_name + ": " + std::to_string(excluded) + " of " +
             std::to_string(n - 1) + " cumulative points near zero");
  return obj;
}

// Golden-section minimum of f on [a, b]; f is assumed unimodal there.
template <typename F>
double golden_section_min(const F& f, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// The objective has a V-shaped kink at a perfect fit, so the bracket must
// shrink far below refine_tol before J(theta_hat) bottoms out; the extra
// iterations are a few dozen cheap evaluations.
constexpr double kDeepTol = 1e-12;

}  // namespace

RatePath reconstruct_rate(double theta, double u_max, const std::vector<int>& years, int t0,
                          double time_unit_years) {
  if (!(theta > 0.0)) fail(Errc::invalid_config, "theta must be positive");
  if (!(u_max > 0.0)) fail(Errc::invalid_config, "u_max must be positive");
  if (!(time_unit_years > 0.0)) fail(Errc::invalid_config, "time_unit_years must be positive");
  RatePath rate;
  rate.key = {"model", Ssp::ssp1, Rcp::rcp19, "reconstructed"};
  rate.years = years;
  rate.t0 = t0;
  rate.u.reserve(years.size());
  for (int y : years) {
    const double tau = double(y - t0) / time_unit_years;
    rate.u.push_back(u_max * (1.0 - std::exp(-theta * tau)));
  }
  return rate;
}

AnnualSeries reconstruct_emissions(double theta, double u_max, const ScenarioRecord& record,
                                   double sigma0, const FitConfig& config) {
  const auto& years = record.primary_energy.years;
  const RatePath rate = reconstruct_rate(theta, u_max, years, years.front(), config.time_unit_years);
  AnnualSeries out;
  out.unit = "Mt CO2/yr";
  out.years = years;
  out.values.reserve(years.size());
  for (std::size_t k = 0; k < years.size(); ++k)
    out.values.push_back(sigma0 * (1.0 - rate.u[k]) * record.primary_energy.values[k] /
                         kKgPerKwhFactor);
  return out;
}

AnnualSeries cumulative_emissions(const AnnualSeries& series) {
  if (series.years.size() < 2) fail(Errc::too_few_points, "cumulative needs >= 2 points");
  AnnualSeries out;
  out.unit = "Mt CO2";
  out.years = series.years;
  out.values.resize(series.years.size());
  out.values[0] = 0.0;
  for (std::size_t k = 1; k < series.years.size(); ++k) {
    const double gap = double(series.years[k] - series.years[k - 1]);
    out.values[k] = out.values[k - 1] + gap * 0.5 * (series.values[k] + series.values[k - 1]);
  }
  return out;
}

double mean_abs_cumulative_distance(std::span<const double> ce_hat, std::span<const double> ce) {
  if (ce_hat.size() != ce.size() || ce.size() < 2)
    fail(Errc::invalid_config, "cumulative series must share a grid with >= 2 points");
  double ce_max = 0.0;
  for (double v : ce) ce_max = std::max(ce_max, std::abs(v));
  const double eps = kCumulativeEpsRel * ce_max;

  double sum = 0.0;
  std::size_t included = 0;
  for (std::size_t k = 1; k < ce.size(); ++k) {
    if (!(std::abs(ce[k]) >= eps) || !(eps > 0.0)) continue;
    sum += std::abs(1.0 - ce_hat[k] / ce[k]);
    ++included;
  }
  const std::size_t excluded = (ce.size() - 1) - included;
  if (2 * excluded > ce.size() - 1)
    fail(Errc::degenerate_cumulative, std::to_string(excluded) + " of " +
                                          std::to_string(ce.size() - 1) +
                                          " cumulative points near zero");
  return sum / double(included);
}

double fit_objective(double theta, const ScenarioRecord& record, double u_max,
                     const FitConfig& config) {
  check_fit_config(config);
  const double sigma0 = carbon_intensity(record).sigma.front();
  return make_objective(record, u_max, sigma0, config)(theta);
}

ThetaEstimate fit_theta(const ScenarioRecord& record, double u_max, const FitConfig& config) {
  check_fit_config(config);
  if (record.emissions_ffi.years.front() != config.start_year)
    fail(Errc::start_year_missing, record.key.model + "/" + record.key.raw_name +
                                       " is not aligned to start year " +
                                       std::to_string(config.start_year));
  if (record.emissions_ffi.years.size() < std::size_t(config.min_valid_points))
    fail(Errc::too_few_points, record.key.model + "/" + record.key.raw_name + " has fewer than " +
                                   std::to_string(config.min_valid_points) + " grid points");

  const double sigma0 = carbon_intensity(record).sigma.front();
  const Objective objective = make_objective(record, u_max, sigma0, config);

  // Coarse log-spaced scan protects against local minima of the piecewise
  // smooth objective.
  const int n_grid = config.grid_points;
  const double log_min = std::log(config.theta_min);
  const double log_step = (std::log(config.theta_max) - log_min) / double(n_grid - 1);
  double best_theta = config.theta_min;
  double best_value = objective(config.theta_min);
  int best_index = 0;
  for (int i = 1; i < n_grid; ++i) {
    const double theta = std::exp(log_min + double(i) * log_step);
    const double value = objective(theta);
    if (value < best_value) {
      best_value = value;
      best_theta = theta;
      best_index = i;
    }
  }

  const double lo = best_index > 0 ? std::exp(log_min + double(best_index - 1) * log_step)
                                   : config.theta_min;
  const double hi = best_index < n_grid - 1 ? std::exp(log_min + double(best_index + 1) * log_step)
                                            : config.theta_max;
  const double tol = std::min(config.refine_tol, kDeepTol);
  double theta_hat = golden_section_min(objective, lo, hi, tol);
  theta_hat = std::clamp(theta_hat, config.theta_min, config.theta_max);
  double value_hat = objective(theta_hat);
  if (best_value < value_hat) {
    theta_hat = best_theta;
    value_hat = best_value;
  }

  ThetaEstimate estimate;
  estimate.key = record.key;
  estimate.theta = theta_hat;
  estimate.objective = value_hat;
  estimate.u_max_used = u_max;
  estimate.halving_years = halving_time(theta_hat, u_max, config.time_unit_years);
  estimate.converged = theta_hat - config.theta_min > config.refine_tol &&
                       config.theta_max - theta_hat > config.refine_tol;
  return estimate;
}

ScenarioRecord synthesize_scenario(double theta_star, double u_max, double sigma0,
                                   const AnnualSeries& energy_path, const FitConfig& config) {
  if (!(theta_star > 0.0)) fail(Errc::invalid_config, "theta_star must be positive");
  if (!(sigma0 > 0.0)) fail(Errc::invalid_config, "sigma0 must be positive");
  if (energy_path.years.size() < 2) fail(Errc::too_few_points, "energy path needs >= 2 points");
  if (std::any_of(energy_path.values.begin(), energy_path.values.end(),
                  [](double v) { return !(v > 0.0); }))
    fail(Errc::invalid_config, "energy path must be strictly positive");

  ScenarioRecord record;
  record.key = {"synthetic", Ssp::ssp1, Rcp::rcp19, "SSP1-19"};
  record.primary_energy = energy_path;
  record.primary_energy.unit = "EJ/yr";
  record.emissions_ffi =
      reconstruct_emissions(theta_star, u_max, record, sigma0, config);
  return record;
}

double halving_time(double theta, double u_max, double time_unit_years) {
  if (!(u_max > 0.5))
    fail(Errc::never_halves, "u_max = " + std::to_string(u_max) + " <= 0.5, intensity never halves");
  if (!(theta > 0.0)) fail(Errc::invalid_config, "theta must be positive");
  if (!(time_unit_years > 0.0)) fail(Errc::invalid_config, "time_unit_years must be positive");
  return time_unit_years * std::log(1.0 - 0.5 / u_max) / (-theta);
}

AmbitionBucket ambition_bucket(double halving_years) {
  if (!(halving_years > 0.0)) fail(Errc::invalid_config, "halving time must be positive");
  if (halving_years <= 10.0) return AmbitionBucket::lt10;
  if (halving_years <= 20.0) return AmbitionBucket::y10_20;
  if (halving_years <= 30.0) return AmbitionBucket::y20_30;
  if (halving_years <= 40.0) return AmbitionBucket::y30_40;
  if (halving_years <= 50.0) return AmbitionBucket::y40_50;
  if (halving_years <= 90.0) return AmbitionBucket::y50_90;
  return AmbitionBucket::gt90;
}

std::string_view bucket_label(AmbitionBucket b) noexcept {
  switch (b) {
    case AmbitionBucket::lt10: return "<10";
    case AmbitionBucket::y10_20: return "(10,20]";
    case AmbitionBucket::y20_30: return "(20,30]";
    case AmbitionBucket::y30_40: return "(30,40]";
    case AmbitionBucket::y40_50: return "(40,50]";
    case AmbitionBucket::y50_90: return "(50,90]";
    case AmbitionBucket::gt90: return ">90";
  }
  return "?";
}

}  // namespace decarb
