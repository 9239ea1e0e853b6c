#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msqa/model.hpp"

// Derive fuzzification parameters from a reference corpus of metric values:
// Q1 ends the certain-LOW region, Q2 is the LOW/HIGH crossover and MED peak,
// Q3 starts the certain-HIGH region, and the corpus maximum closes the axis.

namespace msqa::calib {

struct Quartiles {
  double q1 = 0.0, q2 = 0.0, q3 = 0.0;
};

/// Linear-interpolation quantiles at p = 0.25 / 0.5 / 0.75, reading the sorted
/// order statistics at position (n-1)*p. Needs at least two values.
Quartiles quartiles(std::span<const double> values);

/// Manual replacements for the computed parameters (the slots are, in order,
/// q1, q2, q3 and the axis top). Replaced values must keep the chain
/// 0 <= q1 <= q2 <= q3 <= top monotone.
struct CalibrationOverride {
  std::optional<double> q1, q2, q3, top;

  bool any() const { return q1 || q2 || q3 || top; }
};

struct MetricCalibration {
  std::string metric;
  std::size_t sample_count = 0;
  Quartiles computed;
  double observed_max = 0.0;
  double q1 = 0.0, q2 = 0.0, q3 = 0.0, top = 0.0;  // after overrides
  std::vector<std::string> overrides_applied;
  std::vector<std::string> warnings;  // e.g. collapsed quartiles
};

struct CalibrationReport {
  std::vector<MetricCalibration> metrics;

  std::string to_text() const;
};

/// Per-metric observations, one entry per reference service.
struct ReferenceCorpus {
  std::vector<std::string> sources;  // service names, informational
  std::vector<std::pair<std::string, std::vector<double>>> samples;

  const std::vector<double>* find(const std::string& metric) const;
};

/// Build the LOW/MED/HIGH variable for one metric from at least four observed
/// values, applying any overrides. The report row, when requested, records the
/// computed quartiles, the applied overrides and degeneracy warnings.
model::MetricSpec calibrate_metric(const std::string& name, std::span<const double> values,
                                   const CalibrationOverride& overrides = {},
                                   MetricCalibration* report_row = nullptr);

/// Calibrate every default-model metric (pc, ac, nom, sc) from the corpus and
/// attach the shipped rule bases, output variables, weights and threshold.
std::pair<model::ModelConfig, CalibrationReport> calibrate_model(
    const ReferenceCorpus& corpus,
    const std::vector<std::pair<std::string, CalibrationOverride>>& overrides = {});

}  // namespace msqa::calib
