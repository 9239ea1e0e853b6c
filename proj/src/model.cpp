#include "msqa/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace msqa::model {

const MetricSpec* ModelConfig::find_metric(const std::string& name) const {
  for (const auto& m : metrics)
    if (m.name == name) return &m;
  return nullptr;
}

const CharacteristicSpec* ModelConfig::find_characteristic(const std::string& name) const {
  for (const auto& c : characteristics)
    if (c.name == name) return &c;
  return nullptr;
}

double ModelConfig::weight_of(const std::string& characteristic) const {
  for (const auto& [name, w] : weights)
    if (name == characteristic) return w;
  raise(errc::invariant_violation, "no weight for characteristic '" + characteristic + "'");
}

namespace {

// Depth-first walk over all level combinations of the characteristic's inputs.
void check_rule_table_complete(const ModelConfig& cfg, const CharacteristicSpec& spec) {
  std::vector<const fuzzy::LinguisticVariable*> vars;
  for (const auto& input : spec.inputs) {
    const MetricSpec* m = cfg.find_metric(input);
    if (!m)
      raise(errc::unknown_variable,
            "characteristic '" + spec.name + "' uses unknown metric '" + input + "'");
    vars.push_back(&m->variable);
  }

  std::set<std::vector<std::string>> covered;
  for (const auto& rule : spec.rulebase.rules) {
    std::vector<std::string> tuple;
    for (const auto& [variable, level] : rule.antecedent) {
      const fuzzy::LinguisticVariable* var = nullptr;
      for (std::size_t i = 0; i < spec.inputs.size(); ++i)
        if (spec.inputs[i] == variable) var = vars[i];
      if (!var || !var->find_level(level))
        raise(errc::unknown_level, "rule '" + rule.id + "': metric '" + variable +
                                       "' has no level '" + level + "'");
      tuple.push_back(level);
    }
    covered.insert(tuple);
  }

  std::size_t cells = 1;
  for (const auto* var : vars) cells *= var->levels.size();
  if (covered.size() != cells)
    raise(errc::invariant_violation,
          "characteristic '" + spec.name + "': rule table covers " +
              std::to_string(covered.size()) + " of " + std::to_string(cells) +
              " level combinations");
}

}  // namespace

void ModelConfig::validate() const {
  if (metrics.empty()) raise(errc::invariant_violation, "config declares no metrics");
  if (characteristics.empty())
    raise(errc::invariant_violation, "config declares no characteristics");

  std::set<std::string> metric_names;
  for (const auto& m : metrics) {
    if (!metric_names.insert(m.name).second)
      raise(errc::invariant_violation, "duplicate metric '" + m.name + "'");
    m.variable.validate();
  }

  std::set<std::string> char_names;
  for (const auto& c : characteristics) {
    if (!char_names.insert(c.name).second)
      raise(errc::invariant_violation, "duplicate characteristic '" + c.name + "'");
    if (c.inputs.empty())
      raise(errc::invariant_violation, "characteristic '" + c.name + "' has no inputs");
    if (c.inputs != c.rulebase.input_variables)
      raise(errc::invariant_violation,
            "characteristic '" + c.name + "': rule base inputs differ from declared inputs");
    c.rulebase.validate();
    c.output.validate();
    check_rule_table_complete(*this, c);
  }

  double weight_sum = 0.0;
  std::set<std::string> weighted;
  for (const auto& [name, w] : weights) {
    if (!char_names.contains(name))
      raise(errc::invariant_violation, "weight for unknown characteristic '" + name + "'");
    if (!weighted.insert(name).second)
      raise(errc::invariant_violation, "duplicate weight for '" + name + "'");
    if (!(w >= 0.0 && w <= 1.0))
      raise(errc::invariant_violation, "weight for '" + name + "' outside [0,1]");
    weight_sum += w;
  }
  if (weighted.size() != char_names.size())
    raise(errc::invariant_violation, "every characteristic needs a weight");
  if (std::abs(weight_sum - 1.0) > 1e-9)
    raise(errc::invariant_violation, "weights must sum to 1");

  if (!(threshold >= 0.0 && threshold <= 100.0))
    raise(errc::invariant_violation, "threshold must lie in [0,100]");
}

bool ServiceMetrics::has(const std::string& metric) const {
  for (const auto& [name, value] : values)
    if (name == metric) return true;
  return false;
}

double ServiceMetrics::at(const std::string& metric) const {
  for (const auto& [name, value] : values)
    if (name == metric) return value;
  raise(errc::missing_metric, "service '" + service + "' has no metric '" + metric + "'");
}

double AssessmentResult::score_of(const std::string& characteristic) const {
  for (const auto& trace : characteristics)
    if (trace.characteristic == characteristic) return trace.score;
  raise(errc::unknown_variable, "no characteristic '" + characteristic + "' in result");
}

CharacteristicTrace assess_characteristic(const ModelConfig& cfg, const CharacteristicSpec& spec,
                                          const ServiceMetrics& metrics) {
  CharacteristicTrace trace;
  trace.characteristic = spec.name;

  fuzzy::FuzzyInputs inputs;
  for (const auto& metric_name : spec.inputs) {
    const MetricSpec* m = cfg.find_metric(metric_name);
    if (!m)
      raise(errc::unknown_variable,
            "characteristic '" + spec.name + "' uses unknown metric '" + metric_name + "'");
    if (!metrics.has(metric_name))
      raise(errc::missing_metric,
            "service '" + metrics.service + "' has no metric '" + metric_name + "'");
    const double value = metrics.at(metric_name);
    fuzzy::FuzzyValue degrees = fuzzify(m->variable, value);
    trace.inputs.push_back({metric_name, value, degrees});
    inputs.emplace(metric_name, std::move(degrees));
  }

  const fuzzy::AggregatedOutput agg = fuzzy::infer(spec.rulebase, inputs);
  for (const auto& fired : agg.fired) {
    const fuzzy::Rule& rule = spec.rulebase.rules[fired.rule_index];
    FiredRuleTrace ft;
    ft.id = rule.id;
    for (const auto& [variable, level] : rule.antecedent) ft.antecedent_levels.push_back(level);
    ft.consequent = rule.consequent;
    ft.strength = fired.strength;
    trace.fired.push_back(std::move(ft));
  }
  trace.aggregated = agg.strengths;
  trace.score = fuzzy::defuzzify_centroid(agg, spec.output);
  return trace;
}

AssessmentResult assess_service(const ModelConfig& cfg, const ServiceMetrics& metrics) {
  AssessmentResult result;
  result.service = metrics.service;

  double maintainability = 0.0;
  for (const auto& spec : cfg.characteristics) {
    CharacteristicTrace trace = assess_characteristic(cfg, spec, metrics);
    maintainability += cfg.weight_of(spec.name) * trace.score;
    result.characteristics.push_back(std::move(trace));
  }
  result.maintainability = maintainability;
  result.needs_refactoring = maintainability <= cfg.threshold;
  return result;
}

std::vector<AssessmentResult> assess_portfolio(const ModelConfig& cfg,
                                               const std::vector<ServiceMetrics>& services) {
  std::set<std::string> names;
  for (const auto& s : services)
    if (!names.insert(s.service).second)
      raise(errc::duplicate_service, "duplicate service name '" + s.service + "'");

  std::vector<AssessmentResult> results;
  results.reserve(services.size());
  for (const auto& s : services) results.push_back(assess_service(cfg, s));
  return results;
}

namespace {

std::string num4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string explain(const AssessmentResult& result) {
  std::ostringstream out;
  out << "service: " << result.service << "\n";
  for (const auto& trace : result.characteristics) {
    out << trace.characteristic << ":\n";
    out << "  inputs:\n";
    for (const auto& input : trace.inputs) {
      out << "    " << input.metric << " = " << num4(input.value) << " ->";
      bool first = true;
      for (const auto& [level, degree] : input.degrees.degrees) {
        out << (first ? " " : ", ") << level << " " << num4(degree);
        first = false;
      }
      out << "\n";
    }
    out << "  fired rules:\n";
    for (const auto& fired : trace.fired) {
      out << "    " << fired.id << " (";
      for (std::size_t i = 0; i < fired.antecedent_levels.size(); ++i)
        out << (i ? "," : "") << fired.antecedent_levels[i];
      out << ") -> " << fired.consequent << " @ " << num4(fired.strength) << "\n";
    }
    out << "  aggregated:";
    bool first = true;
    for (const auto& [level, strength] : trace.aggregated) {
      out << (first ? " " : ", ") << level << " " << num4(strength);
      first = false;
    }
    out << "\n";
    out << "  score: " << num4(trace.score) << "\n";
  }
  out << "maintainability: " << num4(result.maintainability) << "\n";
  out << "needs refactoring: " << (result.needs_refactoring ? "yes" : "no") << "\n";
  return out.str();
}

namespace {

fuzzy::RuleBase make_rulebase(std::vector<std::string> inputs,
                              std::vector<std::string> output_levels, const char* id_prefix,
                              const std::vector<std::pair<std::vector<std::string>, std::string>>&
                                  table) {
  fuzzy::RuleBase rb;
  rb.input_variables = std::move(inputs);
  rb.output_levels = std::move(output_levels);
  for (std::size_t i = 0; i < table.size(); ++i) {
    fuzzy::Rule rule;
    rule.id = std::string(id_prefix) + std::to_string(i + 1);
    for (std::size_t k = 0; k < table[i].first.size(); ++k)
      rule.antecedent.emplace_back(rb.input_variables[k], table[i].first[k]);
    rule.consequent = table[i].second;
    rb.rules.push_back(std::move(rule));
  }
  rb.validate();
  return rb;
}

fuzzy::LinguisticVariable score_output(std::string name, fuzzy::MembershipFunction low,
                                       fuzzy::MembershipFunction med,
                                       fuzzy::MembershipFunction high) {
  fuzzy::LinguisticVariable var;
  var.name = std::move(name);
  var.lo = 0.0;
  var.hi = 100.0;
  var.levels = {{"LOW", low}, {"MED", med}, {"HIGH", high}};
  var.validate();
  return var;
}

ModelConfig base_config() {
  using fuzzy::three_level_partition;

  ModelConfig cfg;
  cfg.metrics = {
      {"pc", "%", three_level_partition("pc", 19.4, 24.2, 27.1, 50.0)},
      {"ac", "avg cognitive complexity", three_level_partition("ac", 2.81, 4.78, 5.63, 11.0)},
      {"nom", "methods", three_level_partition("nom", 9.0, 16.0, 30.0, 90.0)},
      {"sc", "calls per service", three_level_partition("sc", 0.125, 0.25, 0.5, 1.0)},
  };

  CharacteristicSpec modifiability;
  modifiability.name = "modifiability";
  modifiability.inputs = {"pc", "ac"};
  modifiability.rulebase = make_rulebase(
      {"pc", "ac"}, {"LOW", "MED", "HIGH"}, "RM",
      {
          {{"LOW", "LOW"}, "HIGH"},
          {{"LOW", "MED"}, "HIGH"},
          {{"LOW", "HIGH"}, "MED"},
          {{"MED", "LOW"}, "HIGH"},
          {{"MED", "MED"}, "MED"},
          {{"MED", "HIGH"}, "LOW"},
          {{"HIGH", "LOW"}, "MED"},
          {{"HIGH", "MED"}, "LOW"},
          {{"HIGH", "HIGH"}, "LOW"},
      });

  CharacteristicSpec testability;
  testability.name = "testability";
  testability.inputs = {"ac", "nom", "sc"};
  testability.rulebase = make_rulebase(
      {"ac", "nom", "sc"}, {"LOW", "MED", "HIGH"}, "RT",
      {
          {{"MED", "HIGH", "LOW"}, "LOW"},     // RT1
          {{"MED", "HIGH", "MED"}, "LOW"},     // RT2
          {{"MED", "HIGH", "HIGH"}, "LOW"},    // RT3
          {{"HIGH", "LOW", "HIGH"}, "LOW"},    // RT4
          {{"HIGH", "MED", "LOW"}, "LOW"},     // RT5
          {{"HIGH", "MED", "MED"}, "LOW"},     // RT6
          {{"HIGH", "MED", "HIGH"}, "LOW"},    // RT7
          {{"HIGH", "HIGH", "LOW"}, "LOW"},    // RT8
          {{"HIGH", "HIGH", "MED"}, "LOW"},    // RT9
          {{"HIGH", "HIGH", "HIGH"}, "LOW"},   // RT10
          {{"LOW", "LOW", "HIGH"}, "MED"},     // RT11
          {{"LOW", "MED", "HIGH"}, "MED"},     // RT12
          {{"LOW", "HIGH", "LOW"}, "MED"},     // RT13
          {{"LOW", "HIGH", "MED"}, "MED"},     // RT14
          {{"LOW", "HIGH", "HIGH"}, "MED"},    // RT15
          {{"MED", "LOW", "HIGH"}, "MED"},     // RT16
          {{"MED", "MED", "LOW"}, "MED"},      // RT17
          {{"MED", "MED", "MED"}, "MED"},      // RT18
          {{"MED", "MED", "HIGH"}, "MED"},     // RT19
          {{"HIGH", "LOW", "LOW"}, "MED"},     // RT20
          {{"HIGH", "LOW", "MED"}, "MED"},     // RT21
          {{"LOW", "LOW", "LOW"}, "HIGH"},     // RT22
          {{"LOW", "LOW", "MED"}, "HIGH"},     // RT23
          {{"LOW", "MED", "LOW"}, "HIGH"},     // RT24
          {{"LOW", "MED", "MED"}, "HIGH"},     // RT25
          {{"MED", "LOW", "LOW"}, "HIGH"},     // RT26
          {{"MED", "LOW", "MED"}, "HIGH"},     // RT27
      });

  cfg.characteristics = {std::move(modifiability), std::move(testability)};
  cfg.weights = {{"modifiability", 0.5}, {"testability", 0.5}};
  cfg.threshold = 40.0;
  return cfg;
}

}  // namespace

ModelConfig default_config() {
  using fuzzy::MembershipFunction;

  ModelConfig cfg = base_config();
  cfg.characteristics[0].output = score_output(
      "modifiability_score", MembershipFunction::trapezoid(0, 0, 30, 40),
      MembershipFunction::triangle(30, 50, 70), MembershipFunction::trapezoid(50, 70, 100, 100));
  cfg.characteristics[1].output = score_output(
      "testability_score", MembershipFunction::trapezoid(0, 0, 30, 40),
      MembershipFunction::triangle(30, 50, 70), MembershipFunction::trapezoid(60, 70, 100, 100));
  cfg.validate();
  return cfg;
}

ModelConfig table4_literal_config() {
  using fuzzy::MembershipFunction;

  ModelConfig cfg = base_config();
  for (auto& spec : cfg.characteristics)
    spec.output = score_output(
        spec.name + "_score", MembershipFunction::trapezoid(0, 0, 30, 40),
        MembershipFunction::triangle(30, 40, 50), MembershipFunction::trapezoid(50, 70, 100, 100));
  cfg.validate();
  return cfg;
}

}  // namespace msqa::model
