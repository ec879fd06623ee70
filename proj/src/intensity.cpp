#include "decarb/intensity.hpp"

#include <string>

#include "decarb/error.hpp"

namespace decarb {

double carbon_intensity_value(double emissions_mtco2, double energy_ej) noexcept {
  return emissions_mtco2 / energy_ej * kKgPerKwhFactor;
}

IntensityPath carbon_intensity(const ScenarioRecord& record) {
  IntensityPath path;
  path.key = record.key;
  path.years = record.emissions_ffi.years;
  path.t0 = path.years.front();
  path.sigma.reserve(path.years.size());
  for (std::size_t i = 0; i < path.years.size(); ++i)
    path.sigma.push_back(
        carbon_intensity_value(record.emissions_ffi.values[i], record.primary_energy.values[i]));
  if (!(path.sigma.front() > 0.0))
    fail(Errc::non_positive_initial_intensity,
         record.key.model + "/" + record.key.raw_name + " at " + std::to_string(path.t0));
  return path;
}

RatePath decarb_rate(const IntensityPath& path) {
  if (!(path.sigma.front() > 0.0))
    fail(Errc::non_positive_initial_intensity,
         path.key.model + "/" + path.key.raw_name + " at " + std::to_string(path.t0));
  RatePath rate;
  rate.key = path.key;
  rate.years = path.years;
  rate.t0 = path.t0;
  const double sigma0 = path.sigma.front();
  rate.u.reserve(path.sigma.size());
  for (double s : path.sigma) rate.u.push_back(1.0 - s / sigma0);
  return rate;
}

UMax global_u_max(const std::vector<RatePath>& rates) {
  if (rates.empty()) fail(Errc::empty_ensemble, "no rate paths");
  UMax best;
  bool first = true;
  for (const auto& path : rates) {
    for (std::size_t i = 0; i < path.u.size(); ++i) {
      if (first || path.u[i] > best.value) {
        best = {path.u[i], path.key, path.years[i]};
        first = false;
      }
    }
  }
  return best;
}

}  // namespace decarb
