#include "decarb/types.hpp"

#include <algorithm>
#include <cctype>

namespace decarb {

namespace {

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view to_string(Ssp s) noexcept {
  switch (s) {
    case Ssp::ssp1: return "SSP1";
    case Ssp::ssp2: return "SSP2";
    case Ssp::ssp3: return "SSP3";
    case Ssp::ssp4: return "SSP4";
    case Ssp::ssp5: return "SSP5";
  }
  return "SSP?";
}

std::string_view to_string(Rcp r) noexcept {
  switch (r) {
    case Rcp::rcp19: return "RCP19";
    case Rcp::rcp26: return "RCP26";
    case Rcp::rcp34: return "RCP34";
    case Rcp::rcp45: return "RCP45";
    case Rcp::rcp60: return "RCP60";
    case Rcp::baseline: return "Baseline";
  }
  return "RCP?";
}

int ordinal(Ssp s) noexcept { return static_cast<int>(s); }
int ordinal(Rcp r) noexcept { return static_cast<int>(r); }

std::optional<std::pair<Ssp, Rcp>> parse_scenario_name(std::string_view name) {
  std::string_view s = trim(name);
  if (s.size() < 6) return std::nullopt;
  const std::string head = lower(s.substr(0, 3));
  if (head != "ssp") return std::nullopt;
  const char digit = s[3];
  if (digit < '1' || digit > '5') return std::nullopt;
  const auto ssp = static_cast<Ssp>(digit - '0');

  std::string_view rest = trim(s.substr(4));
  if (rest.empty() || rest.front() != '-') return std::nullopt;
  const std::string tail = lower(trim(rest.substr(1)));

  Rcp rcp;
  if (tail == "19") rcp = Rcp::rcp19;
  else if (tail == "26") rcp = Rcp::rcp26;
  else if (tail == "34") rcp = Rcp::rcp34;
  else if (tail == "45") rcp = Rcp::rcp45;
  else if (tail == "60") rcp = Rcp::rcp60;
  else if (tail == "baseline") rcp = Rcp::baseline;
  else return std::nullopt;

  return std::make_pair(ssp, rcp);
}

bool key_less(const ScenarioKey& a, const ScenarioKey& b) noexcept {
  if (a.model != b.model) return a.model < b.model;
  return a.raw_name < b.raw_name;
}

std::optional<std::size_t> AnnualSeries::index_of(int year) const noexcept {
  const auto it = std::lower_bound(years.begin(), years.end(), year);
  if (it == years.end() || *it != year) return std::nullopt;
  return static_cast<std::size_t>(it - years.begin());
}

std::optional<double> AnnualSeries::value_at(int year) const noexcept {
  const auto idx = index_of(year);
  if (!idx) return std::nullopt;
  return values[*idx];
}

}  // namespace decarb
