#pragma once

#include <vector>

#include "decarb/types.hpp"

namespace decarb {

// Mt CO2/yr over EJ/yr -> kgCO2/kWh: 1e9 kg / (1e18 J / 3.6e6 J/kWh) = 3.6e-3.
inline constexpr double kKgPerKwhFactor = 3.6e-3;

struct IntensityPath {
  ScenarioKey key;
  std::vector<int> years;
  std::vector<double> sigma;  // kgCO2/kWh, sigma[0] > 0
  int t0 = 0;                 // first grid year
};

struct RatePath {
  ScenarioKey key;
  std::vector<int> years;
  std::vector<double> u;  // dimensionless, u[0] == 0
  int t0 = 0;
};

double carbon_intensity_value(double emissions_mtco2, double energy_ej) noexcept;

IntensityPath carbon_intensity(const ScenarioRecord& record);

// u(t) = 1 - sigma(t)/sigma(t0)
RatePath decarb_rate(const IntensityPath& path);

struct UMax {
  double value = 0.0;
  ScenarioKey key;  // first attaining scenario in (model, scenario) order
  int year = 0;
};

UMax global_u_max(const std::vector<RatePath>& rates);

}  // namespace decarb
