#include "msqa/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace msqa::io {

using ordered_json = nlohmann::ordered_json;

double derive_sc(long long call_count, long long total_services) {
  if (total_services == 0) raise(errc::zero_total_services, "total service count is zero");
  if (total_services < 0)
    raise(errc::invariant_violation, "total service count must be positive");
  if (call_count < 0) raise(errc::negative_value, "call count must be non-negative");
  return static_cast<double>(call_count) / static_cast<double>(total_services);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back("");
  return cells;
}

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, std::size_t column,
                             const std::string& what) {
  raise(errc::parse_error,
        origin + ":" + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

double parse_number(const std::string& cell, const std::string& origin, std::size_t line,
                    std::size_t column) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || cell.empty())
    parse_fail(origin, line, column, "'" + cell + "' is not a number");
  if (!std::isfinite(value)) parse_fail(origin, line, column, "non-finite value");
  return value;
}

}  // namespace

std::vector<model::ServiceMetrics> parse_metrics(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t line_no = 0;
  long long total_services = -1;

  // directive lines, then the header
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      const auto eq = stripped.find('=');
      const std::string key = trim(stripped.substr(1, eq == std::string::npos ? eq : eq - 1));
      if (key != "total_services" || eq == std::string::npos)
        parse_fail(origin, line_no, 1, "unknown directive '" + stripped + "'");
      const double v = parse_number(trim(stripped.substr(eq + 1)), origin, line_no, 1);
      if (v < 0.0 || v != std::floor(v))
        parse_fail(origin, line_no, 1, "total_services must be a non-negative integer");
      total_services = static_cast<long long>(v);
      continue;
    }
    header = split_csv(stripped);
    break;
  }
  if (header.empty()) parse_fail(origin, line_no ? line_no : 1, 1, "missing header");
  if (lower(header.front()) != "service")
    parse_fail(origin, line_no, 1, "first header column must be 'service'");

  std::vector<std::string> columns;
  bool has_calls = false, has_sc = false;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const std::string name = lower(header[i]);
    if (name.empty()) parse_fail(origin, line_no, i + 1, "empty header column");
    if (name == "calls") has_calls = true;
    if (name == "sc") has_sc = true;
    columns.push_back(name);
  }
  if (has_calls && has_sc)
    parse_fail(origin, line_no, 1, "a file carries either 'sc' or 'calls', not both");
  if (has_calls && total_services < 0)
    parse_fail(origin, line_no, 1, "'calls' column needs a '#total_services=N' directive");

  std::vector<model::ServiceMetrics> services;
  std::vector<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#')
      parse_fail(origin, line_no, 1, "directives are only allowed before the header");
    const std::vector<std::string> cells = split_csv(stripped);
    if (cells.size() != columns.size() + 1)
      parse_fail(origin, line_no, cells.size(),
                 "expected " + std::to_string(columns.size() + 1) + " cells, got " +
                     std::to_string(cells.size()));
    model::ServiceMetrics sm;
    sm.service = cells.front();
    if (sm.service.empty()) parse_fail(origin, line_no, 1, "empty service name");
    if (std::find(seen.begin(), seen.end(), sm.service) != seen.end())
      raise(errc::duplicate_service,
            origin + ":" + std::to_string(line_no) + ": duplicate service '" + sm.service + "'");
    seen.push_back(sm.service);

    for (std::size_t i = 0; i < columns.size(); ++i) {
      const double value = parse_number(cells[i + 1], origin, line_no, i + 2);
      if (value < 0.0)
        raise(errc::negative_value, origin + ":" + std::to_string(line_no) + ", column " +
                                        std::to_string(i + 2) + ": negative value for '" +
                                        columns[i] + "' of service '" + sm.service + "'");
      if (columns[i] == "calls") {
        if (value != std::floor(value))
          parse_fail(origin, line_no, i + 2, "call count must be an integer");
        sm.values.emplace_back("sc",
                               derive_sc(static_cast<long long>(value), total_services));
      } else {
        sm.values.emplace_back(columns[i], value);
      }
    }
    services.push_back(std::move(sm));
  }
  return services;
}

std::vector<model::ServiceMetrics> parse_metrics_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open metrics file '" + path + "'");
  return parse_metrics(in, path);
}

LabelsFile parse_labels(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t line_no = 0;

  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    header = split_csv(stripped);
    break;
  }
  if (header.empty()) parse_fail(origin, line_no ? line_no : 1, 1, "missing header");
  if (lower(header.front()) != "service")
    parse_fail(origin, line_no, 1, "first header column must be 'service'");
  if (header.size() < 2) parse_fail(origin, line_no, 1, "need at least one evaluator column");

  LabelsFile labels;
  labels.evaluators.assign(header.begin() + 1, header.end());

  std::vector<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::vector<std::string> cells = split_csv(stripped);
    if (cells.size() != header.size())
      parse_fail(origin, line_no, cells.size(),
                 "expected " + std::to_string(header.size()) + " cells, got " +
                     std::to_string(cells.size()));
    LabelRow row;
    row.service = cells.front();
    if (row.service.empty()) parse_fail(origin, line_no, 1, "empty service name");
    if (std::find(seen.begin(), seen.end(), row.service) != seen.end())
      raise(errc::duplicate_service,
            origin + ":" + std::to_string(line_no) + ": duplicate service '" + row.service + "'");
    seen.push_back(row.service);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i] != "L" && cells[i] != "M" && cells[i] != "H")
        parse_fail(origin, line_no, i + 1, "label must be one of L, M, H; got '" + cells[i] + "'");
      row.labels.push_back(cells[i][0]);
    }
    labels.rows.push_back(std::move(row));
  }
  return labels;
}

LabelsFile parse_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open labels file '" + path + "'");
  return parse_labels(in, path);
}

// ---------------------------------------------------------------------------
// config document

namespace {

void require_keys(const ordered_json& obj, const std::string& path,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) raise(errc::schema_error, path + ": expected an object");
  for (const char* key : required)
    if (!obj.contains(key)) raise(errc::schema_error, path + ": missing key '" + key + "'");
  for (const auto& [key, value] : obj.items()) {
    const auto known = [&key](std::initializer_list<const char*> keys) {
      return std::any_of(keys.begin(), keys.end(),
                         [&key](const char* k) { return key == k; });
    };
    if (!known(required) && !known(optional))
      raise(errc::schema_error, path + ": unknown key '" + key + "'");
  }
}

double get_number(const ordered_json& j, const std::string& path) {
  if (!j.is_number()) raise(errc::schema_error, path + ": expected a number");
  return j.get<double>();
}

std::string get_string(const ordered_json& j, const std::string& path) {
  if (!j.is_string()) raise(errc::schema_error, path + ": expected a string");
  return j.get<std::string>();
}

fuzzy::MembershipFunction parse_mf(const ordered_json& j, const std::string& path) {
  require_keys(j, path, {"name", "shape", "points"});
  const std::string shape = get_string(j["shape"], path + ".shape");
  const ordered_json& pts = j["points"];
  if (!pts.is_array()) raise(errc::schema_error, path + ".points: expected an array");
  std::vector<double> p;
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.push_back(get_number(pts[i], path + ".points[" + std::to_string(i) + "]"));

  try {
    if (shape == "trapezoid") {
      if (p.size() != 4)
        raise(errc::schema_error, path + ".points: trapezoid needs 4 points");
      return fuzzy::MembershipFunction::trapezoid(p[0], p[1], p[2], p[3]);
    }
    if (shape == "triangle") {
      if (p.size() != 3) raise(errc::schema_error, path + ".points: triangle needs 3 points");
      return fuzzy::MembershipFunction::triangle(p[0], p[1], p[2]);
    }
  } catch (const Error& e) {
    if (e.code() == errc::invariant_violation)
      raise(errc::schema_error, path + ".points: " + e.what());
    throw;
  }
  raise(errc::schema_error, path + ".shape: unknown shape '" + shape + "'");
}

fuzzy::LinguisticVariable parse_variable(const ordered_json& j, const std::string& path,
                                         std::string name) {
  fuzzy::LinguisticVariable var;
  var.name = std::move(name);
  const ordered_json& universe = j["universe"];
  if (!universe.is_array() || universe.size() != 2)
    raise(errc::schema_error, path + ".universe: expected [lo, hi]");
  var.lo = get_number(universe[0], path + ".universe[0]");
  var.hi = get_number(universe[1], path + ".universe[1]");
  const ordered_json& levels = j["levels"];
  if (!levels.is_array() || levels.empty())
    raise(errc::schema_error, path + ".levels: expected a non-empty array");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string lpath = path + ".levels[" + std::to_string(i) + "]";
    const std::string lname = get_string(levels[i]["name"], lpath + ".name");
    var.levels.emplace_back(lname, parse_mf(levels[i], lpath));
  }
  return var;
}

ordered_json mf_to_json(const std::string& level, const fuzzy::MembershipFunction& mf) {
  ordered_json j;
  j["name"] = level;
  if (mf.shape == fuzzy::MembershipFunction::Shape::trapezoid) {
    j["shape"] = "trapezoid";
    j["points"] = {mf.a, mf.b, mf.c, mf.d};
  } else {
    j["shape"] = "triangle";
    j["points"] = {mf.a, mf.b, mf.c};
  }
  return j;
}

ordered_json variable_to_json(const fuzzy::LinguisticVariable& var) {
  ordered_json j;
  j["universe"] = {var.lo, var.hi};
  j["levels"] = ordered_json::array();
  for (const auto& [level, mf] : var.levels) j["levels"].push_back(mf_to_json(level, mf));
  return j;
}

}  // namespace

model::ModelConfig load_config(std::istream& in, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(errc::parse_error, origin + ": " + e.what());
  }

  require_keys(doc, origin, {"metrics", "characteristics", "weights", "threshold"});

  model::ModelConfig cfg;
  const ordered_json& metrics = doc["metrics"];
  if (!metrics.is_array()) raise(errc::schema_error, origin + ".metrics: expected an array");
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const std::string path = origin + ".metrics[" + std::to_string(i) + "]";
    require_keys(metrics[i], path, {"name", "universe", "levels"}, {"unit"});
    model::MetricSpec spec;
    spec.name = lower(get_string(metrics[i]["name"], path + ".name"));
    if (metrics[i].contains("unit")) spec.unit = get_string(metrics[i]["unit"], path + ".unit");
    spec.variable = parse_variable(metrics[i], path, spec.name);
    cfg.metrics.push_back(std::move(spec));
  }

  const ordered_json& characteristics = doc["characteristics"];
  if (!characteristics.is_array())
    raise(errc::schema_error, origin + ".characteristics: expected an array");
  for (std::size_t i = 0; i < characteristics.size(); ++i) {
    const std::string path = origin + ".characteristics[" + std::to_string(i) + "]";
    require_keys(characteristics[i], path, {"name", "inputs", "rules", "output"});
    model::CharacteristicSpec spec;
    spec.name = get_string(characteristics[i]["name"], path + ".name");

    const ordered_json& inputs = characteristics[i]["inputs"];
    if (!inputs.is_array() || inputs.empty())
      raise(errc::schema_error, path + ".inputs: expected a non-empty array");
    for (std::size_t k = 0; k < inputs.size(); ++k)
      spec.inputs.push_back(lower(get_string(inputs[k], path + ".inputs")));

    spec.rulebase.input_variables = spec.inputs;
    const ordered_json& rules = characteristics[i]["rules"];
    if (!rules.is_array()) raise(errc::schema_error, path + ".rules: expected an array");
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const std::string rpath = path + ".rules[" + std::to_string(k) + "]";
      require_keys(rules[k], rpath, {"if", "then"}, {"id"});
      fuzzy::Rule rule;
      rule.id = rules[k].contains("id") ? get_string(rules[k]["id"], rpath + ".id")
                                        : "R" + std::to_string(k + 1);
      const ordered_json& antecedent = rules[k]["if"];
      if (!antecedent.is_array() || antecedent.size() != spec.inputs.size())
        raise(errc::schema_error, rpath + ".if: expected one level per input");
      for (std::size_t a = 0; a < antecedent.size(); ++a)
        rule.antecedent.emplace_back(spec.inputs[a], get_string(antecedent[a], rpath + ".if"));
      rule.consequent = get_string(rules[k]["then"], rpath + ".then");
      spec.rulebase.rules.push_back(std::move(rule));
    }

    const std::string opath = path + ".output";
    require_keys(characteristics[i]["output"], opath, {"universe", "levels"});
    spec.output = parse_variable(characteristics[i]["output"], opath, spec.name + "_score");
    for (const auto& [level, mf] : spec.output.levels)
      spec.rulebase.output_levels.push_back(level);
    cfg.characteristics.push_back(std::move(spec));
  }

  const ordered_json& weights = doc["weights"];
  if (!weights.is_object()) raise(errc::schema_error, origin + ".weights: expected an object");
  for (const auto& [name, value] : weights.items())
    cfg.weights.emplace_back(name, get_number(value, origin + ".weights." + name));

  cfg.threshold = get_number(doc["threshold"], origin + ".threshold");

  try {
    cfg.validate();
  } catch (const Error& e) {
    if (e.code() == errc::invariant_violation) throw;
    raise(errc::schema_error, origin + ": " + e.what());
  }
  return cfg;
}

model::ModelConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open config file '" + path + "'");
  return load_config(in, path);
}

std::string save_config(const model::ModelConfig& cfg) {
  ordered_json doc;
  doc["metrics"] = ordered_json::array();
  for (const auto& m : cfg.metrics) {
    ordered_json j;
    j["name"] = m.name;
    j["unit"] = m.unit;
    ordered_json var = variable_to_json(m.variable);
    j["universe"] = var["universe"];
    j["levels"] = var["levels"];
    doc["metrics"].push_back(std::move(j));
  }
  doc["characteristics"] = ordered_json::array();
  for (const auto& c : cfg.characteristics) {
    ordered_json j;
    j["name"] = c.name;
    j["inputs"] = c.inputs;
    j["rules"] = ordered_json::array();
    for (const auto& rule : c.rulebase.rules) {
      ordered_json r;
      r["id"] = rule.id;
      r["if"] = ordered_json::array();
      for (const auto& [variable, level] : rule.antecedent) r["if"].push_back(level);
      r["then"] = rule.consequent;
      j["rules"].push_back(std::move(r));
    }
    j["output"] = variable_to_json(c.output);
    doc["characteristics"].push_back(std::move(j));
  }
  doc["weights"] = ordered_json::object();
  for (const auto& [name, w] : cfg.weights) doc["weights"][name] = w;
  doc["threshold"] = cfg.threshold;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// results export

namespace {

std::string num2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::vector<std::string> characteristic_names(const std::vector<model::AssessmentResult>& results) {
  std::vector<std::string> names;
  for (const auto& trace : results.front().characteristics) names.push_back(trace.characteristic);
  return names;
}

std::string export_csv(const std::vector<model::AssessmentResult>& results) {
  std::ostringstream out;
  out << "service";
  for (const auto& name : characteristic_names(results)) out << "," << name;
  out << ",maintainability,flag\n";
  for (const auto& r : results) {
    out << r.service;
    for (const auto& trace : r.characteristics) out << "," << num2(trace.score);
    out << "," << num2(r.maintainability) << "," << (r.needs_refactoring ? "true" : "false")
        << "\n";
  }
  return out.str();
}

std::string export_table(const std::vector<model::AssessmentResult>& results) {
  const std::vector<std::string> names = characteristic_names(results);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({});
  rows.back().push_back("service");
  for (const auto& name : names) rows.back().push_back(name);
  rows.back().push_back("maintainability");
  rows.back().push_back("flag");
  for (const auto& r : results) {
    std::vector<std::string> row{r.service};
    for (const auto& trace : r.characteristics) row.push_back(num2(trace.score));
    row.push_back(num2(r.maintainability));
    row.push_back(r.needs_refactoring ? "REFACTOR" : "ok");
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());

  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      // left-align the name column, right-align numbers
      if (i == 0)
        out << row[i] << std::string(widths[i] - row[i].size(), ' ');
      else
        out << std::string(widths[i] - row[i].size(), ' ') << row[i];
    }
    out << "\n";
  }
  return out.str();
}

ordered_json trace_to_json(const model::CharacteristicTrace& trace) {
  ordered_json j;
  j["inputs"] = ordered_json::array();
  for (const auto& input : trace.inputs) {
    ordered_json i;
    i["metric"] = input.metric;
    i["value"] = input.value;
    i["degrees"] = ordered_json::object();
    for (const auto& [level, degree] : input.degrees.degrees) i["degrees"][level] = degree;
    j["inputs"].push_back(std::move(i));
  }
  j["fired_rules"] = ordered_json::array();
  for (const auto& fired : trace.fired) {
    ordered_json f;
    f["id"] = fired.id;
    f["if"] = fired.antecedent_levels;
    f["then"] = fired.consequent;
    f["strength"] = fired.strength;
    j["fired_rules"].push_back(std::move(f));
  }
  j["aggregated"] = ordered_json::object();
  for (const auto& [level, strength] : trace.aggregated) j["aggregated"][level] = strength;
  return j;
}

std::string export_json(const std::vector<model::AssessmentResult>& results, bool include_trace) {
  ordered_json doc = ordered_json::array();
  for (const auto& r : results) {
    ordered_json j;
    j["service"] = r.service;
    j["scores"] = ordered_json::object();
    for (const auto& trace : r.characteristics) j["scores"][trace.characteristic] = trace.score;
    j["maintainability"] = r.maintainability;
    j["needs_refactoring"] = r.needs_refactoring;
    if (include_trace) {
      j["trace"] = ordered_json::object();
      for (const auto& trace : r.characteristics)
        j["trace"][trace.characteristic] = trace_to_json(trace);
    }
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string export_results(const std::vector<model::AssessmentResult>& results,
                           ExportFormat format, bool include_trace) {
  if (results.empty()) raise(errc::invariant_violation, "nothing to export");
  switch (format) {
    case ExportFormat::csv: return export_csv(results);
    case ExportFormat::table: return export_table(results);
    case ExportFormat::json: return export_json(results, include_trace);
  }
  raise(errc::invariant_violation, "unknown export format");
}

}  // namespace msqa::io
