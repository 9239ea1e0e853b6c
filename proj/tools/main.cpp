#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msqa/calibration.hpp"
#include "msqa/data_io.hpp"
#include "msqa/model.hpp"
#include "msqa/validation.hpp"

namespace {

using namespace msqa;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitModel = 3;
constexpr int kExitUndefinedMetric = 4;

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::negative_value:
    case errc::duplicate_service:
    case errc::schema_error:
    case errc::zero_total_services:
    case errc::too_few_values:
    case errc::tied_decision:
    case errc::key_mismatch:
    case errc::missing_metric_in_corpus:
      return kExitData;
    default:
      return kExitModel;
  }
}

struct ConfigOptions {
  std::string config_path;
  std::string profile;
  std::optional<double> threshold;
  std::string weights;
};

double parse_flag_number(const std::string& text, const std::string& flag) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value))
    raise(errc::invariant_violation, flag + ": '" + text + "' is not a number");
  return value;
}

void add_config_options(CLI::App* cmd, ConfigOptions& opts, bool with_overrides = true) {
  auto* config = cmd->add_option("--config", opts.config_path, "Model configuration file");
  auto* profile =
      cmd->add_option("--profile", opts.profile, "Built-in configuration: default, table4-literal")
          ->check(CLI::IsMember({"default", "table4-literal"}));
  config->excludes(profile);
  if (with_overrides) {
    cmd->add_option("--threshold", opts.threshold, "Refactoring threshold override");
    cmd->add_option("--weights", opts.weights,
                    "Weight overrides, e.g. mod=0.5,tst=0.5 (names may be unique prefixes)");
  }
}

model::ModelConfig resolve_config(const ConfigOptions& opts) {
  model::ModelConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = io::load_config_file(opts.config_path);
  } else if (!opts.profile.empty()) {
    cfg = opts.profile == "table4-literal" ? model::table4_literal_config()
                                           : model::default_config();
  } else if (const char* env = std::getenv("MSQA_CONFIG"); env && *env) {
    cfg = io::load_config_file(env);
  } else {
    cfg = model::default_config();
  }

  if (opts.threshold) cfg.threshold = *opts.threshold;
  if (!opts.weights.empty()) {
    std::istringstream in(opts.weights);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        raise(errc::invariant_violation, "--weights items must look like name=value");
      const std::string key = item.substr(0, eq);
      const double value = parse_flag_number(item.substr(eq + 1), "--weights");
      // accept exact names, then unique abbreviations ("mod" for
      // "modifiability", "tst" for "testability")
      const auto subsequence_of = [](const std::string& abbrev, const std::string& full) {
        std::size_t i = 0;
        for (const char c : full)
          if (i < abbrev.size() && abbrev[i] == c) ++i;
        return i == abbrev.size();
      };
      std::string matched;
      for (const auto& c : cfg.characteristics)
        if (c.name == key) matched = c.name;
      if (matched.empty()) {
        for (const auto& c : cfg.characteristics) {
          if (subsequence_of(key, c.name)) {
            if (!matched.empty())
              raise(errc::invariant_violation, "--weights: '" + key + "' is ambiguous");
            matched = c.name;
          }
        }
      }
      if (matched.empty())
        raise(errc::invariant_violation, "--weights: no characteristic matches '" + key + "'");
      bool found = false;
      for (auto& [name, w] : cfg.weights)
        if (name == matched) {
          w = value;
          found = true;
        }
      if (!found) cfg.weights.emplace_back(matched, value);
    }
  }
  cfg.validate();
  return cfg;
}

void print_banner_if(bool banner) {
  if (!banner) return;
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  std::cout << "# msqa run at " << buf << "\n";
}

std::string num2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

int run_assess(const ConfigOptions& copts, const std::string& metrics_path,
               const std::string& format, bool trace, bool banner) {
  const model::ModelConfig cfg = resolve_config(copts);
  const auto services = io::parse_metrics_file(metrics_path);
  const auto results = model::assess_portfolio(cfg, services);

  io::ExportFormat fmt = io::ExportFormat::table;
  if (format == "csv") fmt = io::ExportFormat::csv;
  if (format == "json") fmt = io::ExportFormat::json;

  print_banner_if(banner);
  std::cout << io::export_results(results, fmt, trace);
  return 0;
}

int run_explain(const ConfigOptions& copts, const std::string& metrics_path,
                const std::string& service) {
  const model::ModelConfig cfg = resolve_config(copts);
  const auto services = io::parse_metrics_file(metrics_path);
  for (const auto& s : services) {
    if (s.service == service) {
      std::cout << model::explain(model::assess_service(cfg, s));
      std::cout << "threshold: " << num2(cfg.threshold) << "\n";
      return 0;
    }
  }
  raise(errc::missing_metric, "metrics file has no service '" + service + "'");
}

int run_validate(const ConfigOptions& copts, const std::string& metrics_path,
                 const std::string& labels_path, bool verbose) {
  const model::ModelConfig cfg = resolve_config(copts);
  const auto services = io::parse_metrics_file(metrics_path);
  const auto results = model::assess_portfolio(cfg, services);
  const io::LabelsFile labels = io::parse_labels_file(labels_path);

  std::map<std::string, validation::Label> decisions;
  for (const auto& row : labels.rows) {
    std::vector<validation::Label> votes;
    for (const char c : row.labels) votes.push_back(validation::parse_label(c));
    decisions.emplace(row.service, validation::majority_decision(votes));
  }

  std::map<std::string, bool> flags;
  for (const auto& r : results) flags.emplace(r.service, r.needs_refactoring);

  const validation::ConfusionMatrix cm = validation::confusion_low(flags, decisions);
  const validation::ClassificationMetrics metrics = validation::classification_metrics(cm);
  const validation::GroupStats stats = validation::group_stats(results, decisions);

  std::cout << "confusion matrix (positive = decision LOW, prediction = refactor flag)\n";
  std::cout << "  TP " << cm.tp << "  FP " << cm.fp << "\n";
  std::cout << "  FN " << cm.fn << "  TN " << cm.tn << "\n";

  bool undefined = false;
  const auto pct = [&undefined](const std::optional<double>& v) {
    if (!v) {
      undefined = true;
      return std::string("undefined");
    }
    return num2(*v * 100.0) + "%";
  };
  std::cout << "recall     " << pct(metrics.recall) << "\n";
  std::cout << "precision  " << pct(metrics.precision) << "\n";
  std::cout << "f-measure  " << pct(metrics.f_measure) << "\n";
  std::cout << "accuracy   " << pct(metrics.accuracy) << "\n";

  std::cout << "maintainability by decision label\n";
  for (const auto& [label, s] : stats.groups) {
    std::cout << "  " << validation::label_char(label) << ": n=" << s.count
              << " mean=" << num2(s.mean) << " std=" << num2(s.stddev);
    if (verbose) std::cout << " std(population)=" << num2(s.stddev_population);
    std::cout << "\n";
  }
  return undefined ? kExitUndefinedMetric : 0;
}

int run_calibrate(const std::string& reference_path,
                  const std::vector<std::string>& override_specs,
                  const std::string& out_config_path, const std::string& report_path) {
  const auto services = io::parse_metrics_file(reference_path);
  if (services.empty()) raise(errc::too_few_values, "reference corpus is empty");

  calib::ReferenceCorpus corpus;
  for (const auto& s : services) {
    corpus.sources.push_back(s.service);
    for (const auto& [metric, value] : s.values) {
      bool found = false;
      for (auto& [name, values] : corpus.samples)
        if (name == metric) {
          values.push_back(value);
          found = true;
        }
      if (!found) corpus.samples.emplace_back(metric, std::vector<double>{value});
    }
  }

  std::vector<std::pair<std::string, calib::CalibrationOverride>> overrides;
  for (const auto& spec : override_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      raise(errc::invariant_violation, "--override expects metric=q1,q2,q3[,top]");
    calib::CalibrationOverride ov;
    std::istringstream in(spec.substr(eq + 1));
    std::string cell;
    std::vector<double> nums;
    while (std::getline(in, cell, ',')) nums.push_back(parse_flag_number(cell, "--override"));
    if (nums.size() != 3 && nums.size() != 4)
      raise(errc::invariant_violation, "--override expects metric=q1,q2,q3[,top]");
    ov.q1 = nums[0];
    ov.q2 = nums[1];
    ov.q3 = nums[2];
    if (nums.size() == 4) ov.top = nums[3];
    overrides.emplace_back(spec.substr(0, eq), ov);
  }

  auto [cfg, report] = calib::calibrate_model(corpus, overrides);

  std::ofstream out(out_config_path);
  if (!out) raise(errc::parse_error, "cannot write config file '" + out_config_path + "'");
  out << io::save_config(cfg);

  const std::string text = report.to_text();
  if (!report_path.empty()) {
    std::ofstream rep(report_path);
    if (!rep) raise(errc::parse_error, "cannot write report file '" + report_path + "'");
    rep << text;
  }
  std::cout << text;
  std::cout << "config written to " << out_config_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maintainability scoring for microservices from static code metrics"};
  app.require_subcommand(1);

  ConfigOptions assess_cfg, explain_cfg, validate_cfg;

  auto* assess = app.add_subcommand("assess", "Score every service in a metrics file");
  std::string assess_metrics, assess_format = "table";
  bool assess_trace = false, assess_banner = false;
  add_config_options(assess, assess_cfg);
  assess->add_option("--metrics", assess_metrics, "Metrics CSV file")->required();
  assess->add_option("--format", assess_format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  assess->add_flag("--trace", assess_trace, "Include the full pipeline trace (json only)");
  assess->add_flag("--banner", assess_banner, "Print a timestamp banner before the report");

  auto* explain = app.add_subcommand("explain", "Walk through one service's assessment");
  std::string explain_metrics, explain_service;
  add_config_options(explain, explain_cfg);
  explain->add_option("--metrics", explain_metrics, "Metrics CSV file")->required();
  explain->add_option("--service", explain_service, "Service name")->required();

  auto* validate = app.add_subcommand("validate", "Compare predictions against evaluator labels");
  std::string validate_metrics, validate_labels;
  bool validate_verbose = false;
  add_config_options(validate, validate_cfg);
  validate->add_option("--metrics", validate_metrics, "Metrics CSV file")->required();
  validate->add_option("--labels", validate_labels, "Labels CSV file")->required();
  validate->add_flag("--verbose", validate_verbose, "Also print population standard deviations");

  auto* calibrate = app.add_subcommand("calibrate", "Derive a config from a reference corpus");
  std::string cal_reference, cal_out, cal_report;
  std::vector<std::string> cal_overrides;
  calibrate->add_option("--reference", cal_reference, "Reference metrics CSV file")->required();
  calibrate->add_option("--override", cal_overrides,
                        "Manual parameters, metric=q1,q2,q3[,top]; repeatable");
  calibrate->add_option("--out-config", cal_out, "Where to write the config")->required();
  calibrate->add_option("--report", cal_report, "Where to write the calibration report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (assess->parsed())
      return run_assess(assess_cfg, assess_metrics, assess_format, assess_trace, assess_banner);
    if (explain->parsed()) return run_explain(explain_cfg, explain_metrics, explain_service);
    if (validate->parsed())
      return run_validate(validate_cfg, validate_metrics, validate_labels, validate_verbose);
    if (calibrate->parsed())
      return run_calibrate(cal_reference, cal_overrides, cal_out, cal_report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  }
  return kExitUsage;
}
