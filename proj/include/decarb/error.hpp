#pragma once

#include <stdexcept>
#include <string>

namespace decarb {

// Error classes shared across modules; the CLI maps each to a stable exit code.
enum class Errc {
  missing_header,
  unknown_unit,
  malformed_number,
  empty_table,
  start_year_missing,
  too_few_points,
  non_positive_initial_intensity,
  empty_ensemble,
  degenerate_cumulative,
  never_halves,
  too_few_values,
  non_positive_value,
  zero_variance,
  invalid_config,
  io_error,
};

const char* errc_name(Errc c) noexcept;
int exit_code(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace decarb
