#include "decarb/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "decarb/error.hpp"
#include "decarb/jsonfmt.hpp"

namespace decarb {

namespace {

constexpr int kYearMin = 2005;
constexpr int kYearMax = 2100;

const std::set<std::string> kEmissionUnits = {"Mt CO2/yr", "MtCO2/yr"};
const std::set<std::string> kEnergyUnits = {"EJ/yr"};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// RFC-4180-ish: quoted fields may contain commas, doubled quotes and newlines.
std::vector<std::vector<std::string>> tokenize_csv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xef\xbb\xbf") text.remove_prefix(3);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    const bool all_empty = std::all_of(row.begin(), row.end(),
                                       [](const std::string& c) { return trim(c).empty(); });
    if (!all_empty) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r') {
      // swallowed; \r\n handled at \n
    } else if (c == '\n') {
      end_row();
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) end_row();
  return rows;
}

double parse_number(const std::string& cell, const std::string& context) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || end != begin + cell.size() || !std::isfinite(v))
    fail(Errc::malformed_number, "cell '" + cell + "' in " + context);
  return v;
}

struct PendingScenario {
  std::map<int, double> emissions;
  std::map<int, double> energy;
  bool has_emissions = false;
  bool has_energy = false;
  bool duplicate_row = false;
};

}  // namespace

IngestResult parse_scenario_csv(std::string_view bytes, const IngestConfig& config) {
  const auto rows = tokenize_csv(bytes);
  if (rows.empty()) fail(Errc::missing_header, "input contains no rows");

  // Header: the five fixed columns (case-insensitive) followed by year columns.
  const auto& header = rows.front();
  int idx_model = -1, idx_scenario = -1, idx_region = -1, idx_variable = -1, idx_unit = -1;
  std::vector<std::pair<std::size_t, int>> year_columns;  // (column index, year)
  bool years_out_of_range = false;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string name = trim(header[c]);
    const std::string low = lower(name);
    if (low == "model") idx_model = int(c);
    else if (low == "scenario") idx_scenario = int(c);
    else if (low == "region") idx_region = int(c);
    else if (low == "variable") idx_variable = int(c);
    else if (low == "unit") idx_unit = int(c);
    else if (name.empty()) continue;  // trailing separator artifact
    else {
      int year = 0;
      const auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), year);
      if (ec != std::errc() || p != name.data() + name.size())
        fail(Errc::missing_header, "unexpected non-year column '" + name + "'");
      if (year < kYearMin || year > kYearMax) {
        years_out_of_range = true;
        continue;
      }
      year_columns.emplace_back(c, year);
    }
  }
  for (const auto& [label, idx] : {std::pair{"MODEL", idx_model}, {"SCENARIO", idx_scenario},
                                   {"REGION", idx_region}, {"VARIABLE", idx_variable},
                                   {"UNIT", idx_unit}}) {
    if (idx < 0) fail(Errc::missing_header, std::string("required column ") + label + " absent");
  }
  if (year_columns.size() < 2)
    fail(Errc::missing_header, "fewer than two year columns in [2005, 2100]");

  auto cell = [](const std::vector<std::string>& row, int idx) -> std::string {
    return idx >= 0 && std::size_t(idx) < row.size() ? trim(row[std::size_t(idx)]) : std::string();
  };

  std::map<std::pair<std::string, std::string>, PendingScenario> pending;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (cell(row, idx_region) != config.region) continue;
    const std::string variable = cell(row, idx_variable);
    const bool is_emissions = variable == config.emissions_variable;
    const bool is_energy = variable == config.energy_variable;
    if (!is_emissions && !is_energy) continue;

    const std::string model = cell(row, idx_model);
    const std::string scenario = cell(row, idx_scenario);
    const std::string unit = cell(row, idx_unit);
    const std::string context = "row " + std::to_string(r + 1) + " (" + model + ", " + scenario + ")";

    const auto& allowed = is_emissions ? kEmissionUnits : kEnergyUnits;
    if (!allowed.count(unit))
      fail(Errc::unknown_unit, "unit '" + unit + "' for variable '" + variable + "' in " + context);

    auto& entry = pending[{model, scenario}];
    auto& series = is_emissions ? entry.emissions : entry.energy;
    bool& seen = is_emissions ? entry.has_emissions : entry.has_energy;
    if (seen) {
      entry.duplicate_row = true;
      continue;
    }
    seen = true;
    for (const auto& [col, year] : year_columns) {
      const std::string value = col < row.size() ? trim(row[col]) : std::string();
      if (value.empty()) continue;
      series[year] = parse_number(value, context);
    }
  }

  std::vector<IngestWarning> warnings;
  auto warn = [&](const std::string& model, const std::string& scenario, std::string reason) {
    warnings.push_back({model, scenario, std::move(reason)});
  };
  if (years_out_of_range)
    warn("", "", "ignored year columns outside [2005, 2100]");

  ScenarioTable table;
  table.region = config.region;
  table.emissions_variable = config.emissions_variable;
  table.energy_variable = config.energy_variable;

  std::set<std::tuple<std::string, Ssp, Rcp>> seen_keys;
  for (const auto& [id, entry] : pending) {
    const auto& [model, scenario] = id;
    if (entry.duplicate_row) {
      warn(model, scenario, "duplicate rows for one variable; scenario dropped");
      continue;
    }
    if (!entry.has_emissions || !entry.has_energy) {
      warn(model, scenario,
           std::string("missing variable '") +
               (entry.has_emissions ? config.energy_variable : config.emissions_variable) +
               "'; scenario dropped");
      continue;
    }
    const auto parsed = parse_scenario_name(scenario);
    if (!parsed) {
      warn(model, scenario, "unparseable scenario name; scenario dropped");
      continue;
    }

    // Intersection of the two year grids; no interpolation at ingest time.
    ScenarioRecord record;
    record.key = {model, parsed->first, parsed->second, scenario};
    record.emissions_ffi.unit = "Mt CO2/yr";
    record.primary_energy.unit = "EJ/yr";
    std::size_t dropped_years = 0;
    for (const auto& [year, value] : entry.emissions) {
      const auto it = entry.energy.find(year);
      if (it == entry.energy.end()) {
        ++dropped_years;
        continue;
      }
      record.emissions_ffi.years.push_back(year);
      record.emissions_ffi.values.push_back(value);
      record.primary_energy.years.push_back(year);
      record.primary_energy.values.push_back(it->second);
    }
    dropped_years += entry.energy.size() - record.primary_energy.years.size();

    if (record.emissions_ffi.years.size() < 2) {
      warn(model, scenario, "fewer than two common grid years; scenario dropped");
      continue;
    }
    if (!record.emissions_ffi.index_of(config.start_year)) {
      warn(model, scenario,
           "no value at start year " + std::to_string(config.start_year) + "; scenario dropped");
      continue;
    }
    if (std::any_of(record.primary_energy.values.begin(), record.primary_energy.values.end(),
                    [](double v) { return !(v > 0.0); })) {
      warn(model, scenario, "non-positive primary energy; scenario dropped");
      continue;
    }
    if (!seen_keys.insert({model, parsed->first, parsed->second}).second) {
      warn(model, scenario, "duplicate (model, SSP, RCP); scenario dropped");
      continue;
    }
    if (dropped_years > 0)
      warn(model, scenario,
           std::to_string(dropped_years) + " year(s) present in only one variable dropped");

    table.records.push_back(std::move(record));
  }

  if (table.records.empty()) fail(Errc::empty_table, "zero usable scenarios");

  std::sort(table.records.begin(), table.records.end(),
            [](const ScenarioRecord& a, const ScenarioRecord& b) { return key_less(a.key, b.key); });
  std::sort(warnings.begin(), warnings.end(), [](const IngestWarning& a, const IngestWarning& b) {
    return std::tie(a.model, a.scenario, a.reason) < std::tie(b.model, b.scenario, b.reason);
  });
  return {std::move(table), std::move(warnings)};
}

IngestResult load_scenario_csv(const std::filesystem::path& path, const IngestConfig& config) {
  return parse_scenario_csv(read_text_file(path), config);
}

ScenarioRecord align_to_start_year(const ScenarioRecord& record, int start_year, int min_points) {
  const auto idx = record.emissions_ffi.index_of(start_year);
  if (!idx)
    fail(Errc::start_year_missing,
         record.key.model + "/" + record.key.raw_name + " has no value at " +
             std::to_string(start_year));
  const std::size_t remaining = record.emissions_ffi.years.size() - *idx;
  if (remaining < std::size_t(min_points))
    fail(Errc::too_few_points, record.key.model + "/" + record.key.raw_name + " has " +
                                   std::to_string(remaining) + " grid points at/after " +
                                   std::to_string(start_year) + ", need " +
                                   std::to_string(min_points));
  if (*idx == 0) return record;

  ScenarioRecord out;
  out.key = record.key;
  auto slice = [&](const AnnualSeries& s) {
    AnnualSeries r;
    r.unit = s.unit;
    r.years.assign(s.years.begin() + long(*idx), s.years.end());
    r.values.assign(s.values.begin() + long(*idx), s.values.end());
    return r;
  };
  out.emissions_ffi = slice(record.emissions_ffi);
  out.primary_energy = slice(record.primary_energy);
  return out;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string shortest_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string table_to_csv(const ScenarioTable& table) {
  std::set<int> all_years;
  for (const auto& rec : table.records)
    all_years.insert(rec.emissions_ffi.years.begin(), rec.emissions_ffi.years.end());

  std::string out = "MODEL,SCENARIO,REGION,VARIABLE,UNIT";
  for (int y : all_years) out += "," + std::to_string(y);
  out += '\n';

  auto emit = [&](const ScenarioKey& key, const std::string& variable, const AnnualSeries& s) {
    out += csv_escape(key.model) + ',' + csv_escape(key.raw_name) + ',' +
           csv_escape(table.region) + ',' + csv_escape(variable) + ',' + csv_escape(s.unit);
    for (int y : all_years) {
      out += ',';
      if (const auto v = s.value_at(y)) out += shortest_double(*v);
    }
    out += '\n';
  };
  for (const auto& rec : table.records) {
    emit(rec.key, table.emissions_variable, rec.emissions_ffi);
    emit(rec.key, table.energy_variable, rec.primary_energy);
  }
  return out;
}

std::string table_to_json(const ScenarioTable& table) {
  nlohmann::json scenarios = nlohmann::json::array();
  for (const auto& rec : table.records) {
    nlohmann::json entry;
    entry["model"] = rec.key.model;
    entry["scenario"] = rec.key.raw_name;
    entry["ssp"] = std::string(to_string(rec.key.ssp));
    entry["rcp"] = std::string(to_string(rec.key.rcp));
    entry["years"] = rec.emissions_ffi.years;
    entry["emissions_mtco2"] = rec.emissions_ffi.values;
    entry["primary_energy_ej"] = rec.primary_energy.values;
    scenarios.push_back(std::move(entry));
  }
  return dump_json(nlohmann::json{{"scenarios", std::move(scenarios)}});
}

}  // namespace decarb
