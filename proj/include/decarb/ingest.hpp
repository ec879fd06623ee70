#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "decarb/types.hpp"

namespace decarb {

struct IngestConfig {
  std::string region = "World";
  std::string emissions_variable = "Emissions|CO2|Fossil Fuels and Industry";
  std::string energy_variable = "Primary Energy";
  int start_year = 2010;  // every emitted record carries this year
};

struct IngestResult {
  ScenarioTable table;
  std::vector<IngestWarning> warnings;  // sorted by (model, scenario, reason)
};

// Parses the wide-format scenario CSV
// (MODEL,SCENARIO,REGION,VARIABLE,UNIT,<year>,<year>,...).
// Scenarios that cannot form a valid record are dropped with a warning;
// structural problems (missing header, unknown unit, malformed number,
// nothing usable) throw.
IngestResult parse_scenario_csv(std::string_view bytes, const IngestConfig& config = {});
IngestResult load_scenario_csv(const std::filesystem::path& path, const IngestConfig& config = {});

// Drops grid points before start_year; at least min_points must remain.
ScenarioRecord align_to_start_year(const ScenarioRecord& record, int start_year, int min_points = 6);

// Wide-format CSV, re-parseable into an equal table (exact float round trip).
std::string table_to_csv(const ScenarioTable& table);

// {"scenarios":[{model, scenario, ssp, rcp, years, emissions_mtco2, primary_energy_ej}]}
std::string table_to_json(const ScenarioTable& table);

}  // namespace decarb
