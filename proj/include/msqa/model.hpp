#pragma once

#include <string>
#include <utility>
#include <vector>

#include "msqa/fuzzy.hpp"

// The hierarchical maintainability model: metric variables, one rule base per
// sub-characteristic, score-axis output variables, weighted aggregation into a
// single maintainability score and the refactoring threshold.

namespace msqa::model {

struct MetricSpec {
  std::string name;  // matches a metrics-file column, e.g. "pc"
  std::string unit;
  fuzzy::LinguisticVariable variable;

  bool operator==(const MetricSpec&) const = default;
};

struct CharacteristicSpec {
  std::string name;
  std::vector<std::string> inputs;  // metric names, in rule-antecedent order
  fuzzy::RuleBase rulebase;
  fuzzy::LinguisticVariable output;  // score axis, [0,100] by default

  bool operator==(const CharacteristicSpec&) const = default;
};

struct ModelConfig {
  std::vector<MetricSpec> metrics;
  std::vector<CharacteristicSpec> characteristics;
  std::vector<std::pair<std::string, double>> weights;  // characteristic -> weight
  double threshold = 40.0;

  const MetricSpec* find_metric(const std::string& name) const;
  const CharacteristicSpec* find_characteristic(const std::string& name) const;
  double weight_of(const std::string& characteristic) const;

  /// Full structural validation: variables and rule bases are well formed,
  /// every characteristic input resolves to a metric, each rule base is a
  /// complete table over its inputs' levels, weights are in [0,1] and sum to
  /// 1 within 1e-9, threshold lies inside the score universe.
  void validate() const;

  bool operator==(const ModelConfig&) const = default;
};

struct ServiceMetrics {
  std::string service;
  std::vector<std::pair<std::string, double>> values;

  bool has(const std::string& metric) const;
  double at(const std::string& metric) const;  // throws missing_metric

  bool operator==(const ServiceMetrics&) const = default;
};

struct InputTrace {
  std::string metric;
  double value = 0.0;
  fuzzy::FuzzyValue degrees;
};

struct FiredRuleTrace {
  std::string id;
  std::vector<std::string> antecedent_levels;
  std::string consequent;
  double strength = 0.0;
};

struct CharacteristicTrace {
  std::string characteristic;
  std::vector<InputTrace> inputs;
  std::vector<FiredRuleTrace> fired;
  std::vector<std::pair<std::string, double>> aggregated;
  double score = 0.0;
};

struct AssessmentResult {
  std::string service;
  std::vector<CharacteristicTrace> characteristics;
  double maintainability = 0.0;
  bool needs_refactoring = false;

  double score_of(const std::string& characteristic) const;
};

/// Fuzzify the characteristic's inputs, run its rule base and defuzzify.
/// Returns the full trace; the crisp score is trace.score.
CharacteristicTrace assess_characteristic(const ModelConfig& cfg, const CharacteristicSpec& spec,
                                          const ServiceMetrics& metrics);

/// All characteristics plus the weighted maintainability score; the service
/// is flagged when maintainability <= cfg.threshold (boundary included).
AssessmentResult assess_service(const ModelConfig& cfg, const ServiceMetrics& metrics);

/// One result per service, input order preserved. Service names must be unique.
std::vector<AssessmentResult> assess_portfolio(const ModelConfig& cfg,
                                               const std::vector<ServiceMetrics>& services);

/// Deterministic plain-text walk-through of one assessment: fuzzified degrees,
/// fired rules with strengths, aggregates and scores, all at 4 decimals.
std::string explain(const AssessmentResult& result);

/// The shipped model: pc/ac/nom/sc metric variables, the 9-rule modifiability
/// and 27-rule testability bases, equal weights and threshold 40.
ModelConfig default_config();

/// Variant that only swaps the defuzzification output variables for the
/// historical literal set (MED = triangle(30,40,50), same HIGH for both
/// characteristics). Kept for comparison runs.
ModelConfig table4_literal_config();

}  // namespace msqa::model
