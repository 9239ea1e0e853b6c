#include "msqa/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace msqa::calib {

Quartiles quartiles(std::span<const double> values) {
  if (values.size() < 2)
    raise(errc::too_few_values, "quartiles need at least 2 values, got " +
                                    std::to_string(values.size()));

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  const auto quantile = [&sorted](double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto idx = static_cast<std::size_t>(std::floor(pos));
    const double frac = pos - static_cast<double>(idx);
    if (idx + 1 >= sorted.size()) return sorted.back();
    return sorted[idx] + frac * (sorted[idx + 1] - sorted[idx]);
  };

  return {quantile(0.25), quantile(0.5), quantile(0.75)};
}

const std::vector<double>* ReferenceCorpus::find(const std::string& metric) const {
  for (const auto& [name, values] : samples)
    if (name == metric) return &values;
  return nullptr;
}

model::MetricSpec calibrate_metric(const std::string& name, std::span<const double> values,
                                   const CalibrationOverride& overrides,
                                   MetricCalibration* report_row) {
  if (values.size() < 4)
    raise(errc::too_few_values,
          "metric '" + name + "': calibration needs at least 4 values, got " +
              std::to_string(values.size()));
  for (const double v : values)
    if (!(v >= 0.0))
      raise(errc::negative_value, "metric '" + name + "': corpus values must be non-negative");

  MetricCalibration row;
  row.metric = name;
  row.sample_count = values.size();
  row.computed = quartiles(values);
  row.observed_max = *std::max_element(values.begin(), values.end());

  row.q1 = row.computed.q1;
  row.q2 = row.computed.q2;
  row.q3 = row.computed.q3;
  row.top = row.observed_max;

  const auto apply = [&row](const char* slot, const std::optional<double>& v, double& target) {
    if (!v) return;
    char note[64];
    std::snprintf(note, sizeof(note), "%s: %g -> %g", slot, target, *v);
    row.overrides_applied.emplace_back(note);
    target = *v;
  };
  apply("q1", overrides.q1, row.q1);
  apply("q2", overrides.q2, row.q2);
  apply("q3", overrides.q3, row.q3);
  apply("top", overrides.top, row.top);

  if (!(0.0 <= row.q1 && row.q1 <= row.q2 && row.q2 <= row.q3 && row.q3 <= row.top))
    raise(errc::non_monotone_override,
          "metric '" + name + "': parameters must satisfy 0 <= q1 <= q2 <= q3 <= top");

  if (row.q1 == row.q2 || row.q2 == row.q3)
    row.warnings.emplace_back("collapsed quartiles produce vertical membership edges");
  if (row.q3 == row.top)
    row.warnings.emplace_back("HIGH plateau has zero width");

  if (report_row) *report_row = row;

  model::MetricSpec spec;
  spec.name = name;
  spec.variable = fuzzy::three_level_partition(name, row.q1, row.q2, row.q3, row.top);
  return spec;
}

std::pair<model::ModelConfig, CalibrationReport> calibrate_model(
    const ReferenceCorpus& corpus,
    const std::vector<std::pair<std::string, CalibrationOverride>>& overrides) {
  model::ModelConfig cfg = model::default_config();
  CalibrationReport report;

  const auto override_for = [&overrides](const std::string& metric) {
    for (const auto& [name, ov] : overrides)
      if (name == metric) return ov;
    return CalibrationOverride{};
  };

  for (auto& metric : cfg.metrics) {
    const std::vector<double>* values = corpus.find(metric.name);
    if (!values)
      raise(errc::missing_metric_in_corpus,
            "reference corpus has no values for metric '" + metric.name + "'");
    MetricCalibration row;
    metric = calibrate_metric(metric.name, *values, override_for(metric.name), &row);
    report.metrics.push_back(std::move(row));
  }

  for (const auto& [name, ov] : overrides)
    if (!cfg.find_metric(name))
      raise(errc::missing_metric_in_corpus, "override targets unknown metric '" + name + "'");

  cfg.validate();
  return {std::move(cfg), std::move(report)};
}

std::string CalibrationReport::to_text() const {
  std::ostringstream out;
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return std::string(buf);
  };
  out << "calibration report\n";
  for (const auto& m : metrics) {
    out << m.metric << ": n=" << m.sample_count << " Q1=" << num(m.computed.q1)
        << " Q2=" << num(m.computed.q2) << " Q3=" << num(m.computed.q3)
        << " max=" << num(m.observed_max) << "\n";
    out << "  parameters: q1=" << num(m.q1) << " q2=" << num(m.q2) << " q3=" << num(m.q3)
        << " top=" << num(m.top) << "\n";
    for (const auto& o : m.overrides_applied) out << "  override " << o << "\n";
    for (const auto& w : m.warnings) out << "  warning: " << w << "\n";
  }
  return out.str();
}

}  // namespace msqa::calib
