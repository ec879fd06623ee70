#pragma once

// Decarbonization-speed fitting.
//
// A scenario's rate path u(t) = 1 - sigma(t)/sigma(t0) is matched by the
// saturating exponential u_max * (1 - exp(-theta * tau)) with
// tau = (year - t0) / time_unit_years. theta is chosen to minimize the mean
// absolute relative distance between the scenario's cumulative emissions and
// those implied by the model rate applied to the scenario's own
// primary-energy path.

#include <span>
#include <string_view>
#include <vector>

#include "decarb/intensity.hpp"
#include "decarb/types.hpp"

namespace decarb {

struct FitConfig {
  double time_unit_years = 5.0;  // theta is "per 5 years"
  double theta_min = 1e-4;
  double theta_max = 2.0;
  int grid_points = 400;       // coarse log-spaced scan
  double refine_tol = 1e-7;    // upper bound on the final bracket width
  int start_year = 2010;
  int min_valid_points = 6;
};

struct ThetaEstimate {
  ScenarioKey key;
  double theta = 0.0;
  double objective = 0.0;      // mean |1 - CE_hat/CE|
  double halving_years = 0.0;
  double u_max_used = 0.0;
  bool converged = false;      // false when theta sits on a bound
};

// u[i] = u_max * (1 - exp(-theta * tau_i)); u at t0 is exactly 0.
RatePath reconstruct_rate(double theta, double u_max, const std::vector<int>& years,
                          int t0, double time_unit_years);

// E_hat[t] = sigma0 * (1 - u(t)) * primary_energy[t] / 0.0036, Mt CO2/yr.
AnnualSeries reconstruct_emissions(double theta, double u_max, const ScenarioRecord& record,
                                   double sigma0, const FitConfig& config = {});

// Trapezoid over the actual year gaps; CE at the first point is 0.
AnnualSeries cumulative_emissions(const AnnualSeries& series);

// Mean of |1 - ce_hat[k]/ce[k]| over k >= 1, skipping points with
// |ce[k]| < 1e-9 * max|ce|. Throws DegenerateCumulative when more than half
// of the points are skipped.
double mean_abs_cumulative_distance(std::span<const double> ce_hat, std::span<const double> ce);

double fit_objective(double theta, const ScenarioRecord& record, double u_max,
                     const FitConfig& config = {});

// Coarse log-spaced grid scan followed by golden-section refinement.
ThetaEstimate fit_theta(const ScenarioRecord& record, double u_max, const FitConfig& config = {});

// Test oracle: emissions implied exactly by the rate model, so that
// fit_theta recovers theta_star.
ScenarioRecord synthesize_scenario(double theta_star, double u_max, double sigma0,
                                   const AnnualSeries& energy_path, const FitConfig& config = {});

// Years until intensity halves: time_unit_years * ln(1 - 0.5/u_max) / (-theta).
double halving_time(double theta, double u_max, double time_unit_years);

enum class AmbitionBucket { lt10, y10_20, y20_30, y30_40, y40_50, y50_90, gt90 };
inline constexpr int kAmbitionBucketCount = 7;

AmbitionBucket ambition_bucket(double halving_years);
std::string_view bucket_label(AmbitionBucket b) noexcept;  // "<10", "(10,20]", ..., ">90"

}  // namespace decarb
