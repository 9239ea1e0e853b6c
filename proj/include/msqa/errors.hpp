#pragma once

#include <stdexcept>
#include <string>

namespace msqa {

// Every failure the library reports, one code per documented error class.
enum class errc {
  non_finite_input,
  negative_metric_value,
  unknown_variable,
  unknown_level,
  no_rule_fired,
  empty_aggregate,
  missing_metric,
  duplicate_service,
  too_few_values,
  non_monotone_override,
  missing_metric_in_corpus,
  parse_error,
  negative_value,
  schema_error,
  invariant_violation,
  zero_total_services,
  tied_decision,
  key_mismatch,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace msqa
