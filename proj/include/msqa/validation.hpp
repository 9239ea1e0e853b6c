#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msqa/model.hpp"

// Comparison of model predictions against human labels: majority decision,
// confusion matrix for LOW detection, classification metrics and per-label
// score statistics.

namespace msqa::validation {

enum class Label { low, med, high };

Label parse_label(char c);       // 'L' / 'M' / 'H'
char label_char(Label l) noexcept;

/// The label with a strict plurality. Any tie for first place is an error
/// that needs manual resolution.
Label majority_decision(std::span<const Label> labels);

struct ConfusionMatrix {
  long tp = 0, fp = 0, fn = 0, tn = 0;

  long total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

/// Positive class = decision LOW, prediction = refactoring flag.
/// Both maps must cover exactly the same services.
ConfusionMatrix confusion_low(const std::map<std::string, bool>& predicted_flags,
                              const std::map<std::string, Label>& decisions);

/// Each ratio is empty when its denominator is zero; callers report
/// undefined metrics individually rather than failing the whole run.
struct ClassificationMetrics {
  std::optional<double> recall, precision, f_measure, accuracy;
};

ClassificationMetrics classification_metrics(const ConfusionMatrix& cm);

struct LabelStats {
  std::size_t count = 0;
  double mean = 0.0;
  double stddev = 0.0;      // sample (n-1); defined as 0 for a single value
  double stddev_population = 0.0;
};

struct GroupStats {
  std::vector<std::pair<Label, LabelStats>> groups;  // only labels that occur

  const LabelStats* find(Label l) const;
};

/// Mean and standard deviation of the maintainability scores per decision
/// label. The decisions map must cover every result.
GroupStats group_stats(const std::vector<model::AssessmentResult>& results,
                       const std::map<std::string, Label>& decisions);

}  // namespace msqa::validation
