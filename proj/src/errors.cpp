#include "msqa/errors.hpp"

namespace msqa {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::non_finite_input: return "NonFiniteInput";
    case errc::negative_metric_value: return "NegativeMetricValue";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::unknown_level: return "UnknownLevel";
    case errc::no_rule_fired: return "NoRuleFired";
    case errc::empty_aggregate: return "EmptyAggregate";
    case errc::missing_metric: return "MissingMetric";
    case errc::duplicate_service: return "DuplicateService";
    case errc::too_few_values: return "TooFewValues";
    case errc::non_monotone_override: return "NonMonotoneOverride";
    case errc::missing_metric_in_corpus: return "MissingMetricInCorpus";
    case errc::parse_error: return "ParseError";
    case errc::negative_value: return "NegativeValue";
    case errc::schema_error: return "SchemaError";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::zero_total_services: return "ZeroTotalServices";
    case errc::tied_decision: return "TiedDecision";
    case errc::key_mismatch: return "KeyMismatch";
  }
  return "UnknownError";
}

}  // namespace msqa
