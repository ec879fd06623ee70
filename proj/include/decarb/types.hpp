#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace decarb {

enum class Ssp { ssp1 = 1, ssp2, ssp3, ssp4, ssp5 };

// End-of-century forcing targets; Baseline imposes none.
enum class Rcp { rcp19 = 1, rcp26, rcp34, rcp45, rcp60, baseline };

std::string_view to_string(Ssp s) noexcept;
std::string_view to_string(Rcp r) noexcept;
int ordinal(Ssp s) noexcept;  // 1..5
int ordinal(Rcp r) noexcept;  // 1..6 in the order 19, 26, 34, 45, 60, Baseline

// Parses "SSPx-yy" / "SSPx-Baseline", case-insensitive, tolerating
// whitespace around the dash. Returns nullopt for anything else.
std::optional<std::pair<Ssp, Rcp>> parse_scenario_name(std::string_view name);

struct ScenarioKey {
  std::string model;
  Ssp ssp = Ssp::ssp1;
  Rcp rcp = Rcp::baseline;
  std::string raw_name;  // scenario string as reported, e.g. "SSP1-19"

  friend bool operator==(const ScenarioKey&, const ScenarioKey&) = default;
};

// Orders by (model, raw scenario name); all deterministic listings use this.
bool key_less(const ScenarioKey& a, const ScenarioKey& b) noexcept;

struct AnnualSeries {
  std::vector<int> years;      // strictly ascending, within [2005, 2100]
  std::vector<double> values;  // same length as years
  std::string unit;

  std::optional<std::size_t> index_of(int year) const noexcept;
  std::optional<double> value_at(int year) const noexcept;

  friend bool operator==(const AnnualSeries&, const AnnualSeries&) = default;
};

struct ScenarioRecord {
  ScenarioKey key;
  AnnualSeries emissions_ffi;   // Mt CO2/yr
  AnnualSeries primary_energy;  // EJ/yr, strictly positive, same year grid

  friend bool operator==(const ScenarioRecord&, const ScenarioRecord&) = default;
};

struct IngestWarning {
  std::string model;
  std::string scenario;
  std::string reason;

  friend bool operator==(const IngestWarning&, const IngestWarning&) = default;
};

struct ScenarioTable {
  std::vector<ScenarioRecord> records;  // sorted by (model, scenario)
  std::string region;
  std::string emissions_variable;
  std::string energy_variable;

  friend bool operator==(const ScenarioTable&, const ScenarioTable&) = default;
};

}  // namespace decarb
