#include "decarb/error.hpp"

namespace decarb {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::missing_header: return "MissingHeader";
    case Errc::unknown_unit: return "UnknownUnit";
    case Errc::malformed_number: return "MalformedNumber";
    case Errc::empty_table: return "EmptyTable";
    case Errc::start_year_missing: return "StartYearMissing";
    case Errc::too_few_points: return "TooFewPoints";
    case Errc::non_positive_initial_intensity: return "NonPositiveInitialIntensity";
    case Errc::empty_ensemble: return "EmptyEnsemble";
    case Errc::degenerate_cumulative: return "DegenerateCumulative";
    case Errc::never_halves: return "NeverHalves";
    case Errc::too_few_values: return "TooFewValues";
    case Errc::non_positive_value: return "NonPositiveValue";
    case Errc::zero_variance: return "ZeroVariance";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

int exit_code(Errc c) noexcept {
  switch (c) {
    case Errc::empty_table: return 10;
    case Errc::missing_header: return 11;
    case Errc::unknown_unit: return 12;
    case Errc::malformed_number: return 13;
    case Errc::start_year_missing: return 14;
    case Errc::too_few_points: return 15;
    case Errc::non_positive_initial_intensity: return 16;
    case Errc::empty_ensemble: return 17;
    case Errc::degenerate_cumulative: return 18;
    case Errc::never_halves: return 19;
    case Errc::too_few_values: return 20;
    case Errc::non_positive_value: return 21;
    case Errc::zero_variance: return 22;
    case Errc::invalid_config: return 23;
    case Errc::io_error: return 24;
  }
  return 1;
}

}  // namespace decarb
