#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "msqa/model.hpp"

// File formats: metrics CSV ingestion (with optional service-call-ratio
// derivation from raw call counts), evaluator label files, model configuration
// serialization (JSON) and results export. Parsing is stateless per file.

namespace msqa::io {

/// calls / total, the project-size-independent service coupling ratio.
/// total_services counts every service in the project, callers included.
double derive_sc(long long call_count, long long total_services);

/// Metrics CSV: optional `#total_services=N` directive lines, then a header
/// `service,<metric>,...`. A `calls` column (mutually exclusive with `sc`)
/// is converted to `sc` via derive_sc. Values must be non-negative, decimal
/// point only; service names must be unique. Errors carry line/column.
std::vector<model::ServiceMetrics> parse_metrics(std::istream& in,
                                                 const std::string& origin = "<stream>");
std::vector<model::ServiceMetrics> parse_metrics_file(const std::string& path);

struct LabelRow {
  std::string service;
  std::vector<char> labels;  // one of 'L','M','H' per evaluator
};

struct LabelsFile {
  std::vector<std::string> evaluators;
  std::vector<LabelRow> rows;
};

/// Labels CSV: header `service,e1,...,en` (n >= 1), values in {L,M,H}.
LabelsFile parse_labels(std::istream& in, const std::string& origin = "<stream>");
LabelsFile parse_labels_file(const std::string& path);

/// Config document (JSON): top-level keys `metrics`, `characteristics`,
/// `weights`, `threshold`. Unknown keys anywhere are schema errors; the loaded
/// config is fully validated. load_config(save_config(cfg)) == cfg.
model::ModelConfig load_config(std::istream& in, const std::string& origin = "<stream>");
model::ModelConfig load_config_file(const std::string& path);
std::string save_config(const model::ModelConfig& cfg);

enum class ExportFormat { table, csv, json };

/// Render assessment results in input order. table/csv print scores at two
/// decimals with a flag column; json carries full-precision values and,
/// when asked, the complete per-service trace.
std::string export_results(const std::vector<model::AssessmentResult>& results,
                           ExportFormat format, bool include_trace = false);

}  // namespace msqa::io
