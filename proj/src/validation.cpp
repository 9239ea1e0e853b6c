#include "msqa/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace msqa::validation {

Label parse_label(char c) {
  switch (c) {
    case 'L': return Label::low;
    case 'M': return Label::med;
    case 'H': return Label::high;
  }
  raise(errc::parse_error, std::string("label must be one of L, M, H; got '") + c + "'");
}

char label_char(Label l) noexcept {
  switch (l) {
    case Label::low: return 'L';
    case Label::med: return 'M';
    case Label::high: return 'H';
  }
  return '?';
}

Label majority_decision(std::span<const Label> labels) {
  if (labels.empty()) raise(errc::invariant_violation, "majority vote over an empty label list");

  std::array<std::size_t, 3> counts{0, 0, 0};
  for (const Label l : labels) ++counts[static_cast<std::size_t>(l)];

  const std::size_t best = *std::max_element(counts.begin(), counts.end());
  std::size_t winners = 0;
  Label winner = Label::low;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == best) {
      ++winners;
      winner = static_cast<Label>(i);
    }
  }
  if (winners != 1)
    raise(errc::tied_decision, "no strict majority; resolve the tie manually");
  return winner;
}

ConfusionMatrix confusion_low(const std::map<std::string, bool>& predicted_flags,
                              const std::map<std::string, Label>& decisions) {
  if (predicted_flags.size() != decisions.size())
    raise(errc::key_mismatch, "predictions and decisions cover different services");

  ConfusionMatrix cm;
  for (const auto& [service, flagged] : predicted_flags) {
    const auto it = decisions.find(service);
    if (it == decisions.end())
      raise(errc::key_mismatch, "no decision for service '" + service + "'");
    const bool actual_low = it->second == Label::low;
    if (flagged && actual_low)
      ++cm.tp;
    else if (flagged && !actual_low)
      ++cm.fp;
    else if (!flagged && actual_low)
      ++cm.fn;
    else
      ++cm.tn;
  }
  return cm;
}

ClassificationMetrics classification_metrics(const ConfusionMatrix& cm) {
  ClassificationMetrics m;
  const auto tp = static_cast<double>(cm.tp);
  if (cm.tp + cm.fn > 0) m.recall = tp / static_cast<double>(cm.tp + cm.fn);
  if (cm.tp + cm.fp > 0) m.precision = tp / static_cast<double>(cm.tp + cm.fp);
  if (m.recall && m.precision && (*m.recall + *m.precision) > 0.0)
    m.f_measure = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
  if (cm.total() > 0)
    m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
  return m;
}

const LabelStats* GroupStats::find(Label l) const {
  for (const auto& [label, stats] : groups)
    if (label == l) return &stats;
  return nullptr;
}

GroupStats group_stats(const std::vector<model::AssessmentResult>& results,
                       const std::map<std::string, Label>& decisions) {
  std::array<std::vector<double>, 3> buckets;
  for (const auto& r : results) {
    const auto it = decisions.find(r.service);
    if (it == decisions.end())
      raise(errc::key_mismatch, "no decision for service '" + r.service + "'");
    buckets[static_cast<std::size_t>(it->second)].push_back(r.maintainability);
  }

  GroupStats stats;
  for (const Label label : {Label::low, Label::med, Label::high}) {
    const std::vector<double>& scores = buckets[static_cast<std::size_t>(label)];
    if (scores.empty()) continue;
    LabelStats s;
    s.count = scores.size();
    double sum = 0.0;
    for (const double v : scores) sum += v;
    s.mean = sum / static_cast<double>(scores.size());
    double ss = 0.0;
    for (const double v : scores) ss += (v - s.mean) * (v - s.mean);
    s.stddev = scores.size() > 1
                   ? std::sqrt(ss / static_cast<double>(scores.size() - 1))
                   : 0.0;  // sample std of a single value
    s.stddev_population = std::sqrt(ss / static_cast<double>(scores.size()));
    stats.groups.emplace_back(label, s);
  }
  return stats;
}

}  // namespace msqa::validation
