#include "msqa/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace msqa::fuzzy {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) raise(errc::non_finite_input, std::string(what) + " is not finite");
}

}  // namespace

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
  require_finite(a, "breakpoint a");
  require_finite(b, "breakpoint b");
  require_finite(c, "breakpoint c");
  require_finite(d, "breakpoint d");
  if (!(a <= b && b <= c && c <= d))
    raise(errc::invariant_violation, "trapezoid breakpoints must satisfy a <= b <= c <= d");
  return MembershipFunction{Shape::trapezoid, a, b, c, d};
}

MembershipFunction MembershipFunction::triangle(double a, double b, double c) {
  require_finite(a, "breakpoint a");
  require_finite(b, "breakpoint b");
  require_finite(c, "breakpoint c");
  if (!(a <= b && b <= c))
    raise(errc::invariant_violation, "triangle breakpoints must satisfy a <= b <= c");
  return MembershipFunction{Shape::triangle, a, b, c, c};
}

double eval_membership(const MembershipFunction& mf, double x) {
  require_finite(x, "input value");
  if (x < 0.0) raise(errc::negative_metric_value, "membership evaluated at negative value");

  double y = 0.0;
  if (mf.shape == MembershipFunction::Shape::trapezoid) {
    if (x < mf.a)
      y = 0.0;
    else if (x < mf.b)
      y = (x - mf.a) / (mf.b - mf.a);
    else if (x <= mf.c)
      y = 1.0;
    else if (x <= mf.d)
      y = (mf.d - x) / (mf.d - mf.c);
    else
      y = (mf.c == mf.d) ? 1.0 : 0.0;  // vertical right shoulder plateaus on
  } else {
    if (x < mf.a || x > mf.c)
      y = 0.0;
    else if (x == mf.b)
      y = 1.0;
    else if (x < mf.b)
      y = (x - mf.a) / (mf.b - mf.a);
    else
      y = (mf.c - x) / (mf.c - mf.b);
  }
  return std::clamp(y, 0.0, 1.0);
}

const MembershipFunction* LinguisticVariable::find_level(const std::string& level) const {
  for (const auto& [name, mf] : levels)
    if (name == level) return &mf;
  return nullptr;
}

void LinguisticVariable::validate() const {
  if (!(lo < hi))
    raise(errc::invariant_violation, "variable '" + name + "': universe lo must be < hi");
  if (lo < 0.0)
    raise(errc::invariant_violation, "variable '" + name + "': universe must be non-negative");
  if (levels.empty())
    raise(errc::invariant_violation, "variable '" + name + "' has no levels");
  std::set<std::string> seen;
  for (const auto& [lvl, mf] : levels) {
    if (!seen.insert(lvl).second)
      raise(errc::invariant_violation, "variable '" + name + "': duplicate level '" + lvl + "'");
    const double last = mf.shape == MembershipFunction::Shape::triangle ? mf.c : mf.d;
    if (mf.a < lo || last > hi)
      raise(errc::invariant_violation,
            "variable '" + name + "', level '" + lvl + "': breakpoints outside universe");
  }
}

LinguisticVariable three_level_partition(std::string name, double q1, double q2, double q3,
                                         double top) {
  if (!(0.0 <= q1 && q1 <= q2 && q2 <= q3 && q3 <= top))
    raise(errc::invariant_violation,
          "partition parameters for '" + name + "' must satisfy 0 <= q1 <= q2 <= q3 <= top");
  LinguisticVariable var;
  var.name = std::move(name);
  var.lo = 0.0;
  var.hi = top;
  var.levels = {
      {"LOW", MembershipFunction::trapezoid(0.0, 0.0, q1, q2)},
      {"MED", MembershipFunction::triangle(q1, q2, q3)},
      {"HIGH", MembershipFunction::trapezoid(q2, q3, top, top)},
  };
  var.validate();
  return var;
}

double FuzzyValue::at(const std::string& level) const {
  for (const auto& [name, degree] : degrees)
    if (name == level) return degree;
  raise(errc::unknown_level, "no degree for level '" + level + "'");
}

double FuzzyValue::sum() const {
  double s = 0.0;
  for (const auto& [name, degree] : degrees) s += degree;
  return s;
}

FuzzyValue fuzzify(const LinguisticVariable& var, double x) {
  require_finite(x, "metric value");
  if (x < 0.0)
    raise(errc::negative_metric_value, "variable '" + var.name + "': negative value");
  if (var.levels.empty())
    raise(errc::invariant_violation, "variable '" + var.name + "' has no levels");

  const double clamped = std::min(x, var.hi);
  FuzzyValue out;
  out.degrees.reserve(var.levels.size());
  for (const auto& [level, mf] : var.levels)
    out.degrees.emplace_back(level, eval_membership(mf, clamped));
  return out;
}

void RuleBase::validate() const {
  if (input_variables.empty())
    raise(errc::invariant_violation, "rule base declares no input variables");
  if (output_levels.empty())
    raise(errc::invariant_violation, "rule base declares no output levels");

  std::set<std::vector<std::string>> tuples;
  for (const auto& rule : rules) {
    if (rule.antecedent.size() != input_variables.size())
      raise(errc::invariant_violation,
            "rule '" + rule.id + "' does not cover every input variable");
    std::vector<std::string> tuple;
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
      if (rule.antecedent[i].first != input_variables[i])
        raise(errc::unknown_variable, "rule '" + rule.id + "': antecedent variable '" +
                                          rule.antecedent[i].first + "' out of order (expected '" +
                                          input_variables[i] + "')");
      tuple.push_back(rule.antecedent[i].second);
    }
    if (!tuples.insert(tuple).second)
      raise(errc::invariant_violation,
            "rule '" + rule.id + "' repeats an antecedent level combination");
    if (std::find(output_levels.begin(), output_levels.end(), rule.consequent) ==
        output_levels.end())
      raise(errc::unknown_level,
            "rule '" + rule.id + "': consequent '" + rule.consequent + "' is not a declared level");
  }
}

double rule_strength(const Rule& rule, const FuzzyInputs& inputs) {
  double strength = 1.0;
  for (const auto& [variable, level] : rule.antecedent) {
    auto it = inputs.find(variable);
    if (it == inputs.end())
      raise(errc::unknown_variable, "rule '" + rule.id + "': no input for variable '" + variable + "'");
    strength = std::min(strength, it->second.at(level));
  }
  return strength;
}

double AggregatedOutput::strength_of(const std::string& level) const {
  for (const auto& [name, s] : strengths)
    if (name == level) return s;
  return 0.0;
}

AggregatedOutput infer(const RuleBase& rb, const FuzzyInputs& inputs) {
  for (const auto& variable : rb.input_variables)
    if (!inputs.contains(variable))
      raise(errc::unknown_variable, "inference inputs miss variable '" + variable + "'");

  AggregatedOutput agg;
  std::map<std::string, double> maxima;
  for (std::size_t i = 0; i < rb.rules.size(); ++i) {
    const double s = rule_strength(rb.rules[i], inputs);
    if (s > 0.0) {
      agg.fired.push_back({i, rb.rules[i].id, s});
      auto [it, inserted] = maxima.try_emplace(rb.rules[i].consequent, s);
      if (!inserted) it->second = std::max(it->second, s);
    }
  }
  if (agg.fired.empty()) raise(errc::no_rule_fired, "no rule fired; rule table incomplete?");

  for (const auto& level : rb.output_levels)
    if (auto it = maxima.find(level); it != maxima.end())
      agg.strengths.emplace_back(level, it->second);
  return agg;
}

namespace {

// One linear piece y = m*x + q of a clipped level set, valid on [x0, x1].
struct Segment {
  double x0, x1, m, q;
};

void push_linear(std::vector<Segment>& segs, double x0, double x1, double y0, double y1,
                 double lo, double hi) {
  if (!(x1 > x0)) return;
  const double m = (y1 - y0) / (x1 - x0);
  const double q = y0 - m * x0;
  const double cx0 = std::max(x0, lo);
  const double cx1 = std::min(x1, hi);
  if (!(cx1 > cx0)) return;
  segs.push_back({cx0, cx1, m, q});
}

void push_const(std::vector<Segment>& segs, double x0, double x1, double y, double lo, double hi) {
  x0 = std::max(x0, lo);
  x1 = std::min(x1, hi);
  if (!(x1 > x0)) return;
  segs.push_back({x0, x1, 0.0, y});
}

// Decompose min(alpha, mf) into linear pieces over [lo, hi].
void clipped_pieces(const MembershipFunction& mf, double alpha, double lo, double hi,
                    std::vector<Segment>& segs) {
  if (mf.shape == MembershipFunction::Shape::trapezoid) {
    const double rise_end = (mf.a < mf.b) ? mf.a + alpha * (mf.b - mf.a) : mf.a;
    // a vertical right shoulder keeps its plateau to the end of the universe
    const double fall_start = (mf.c < mf.d) ? mf.d - alpha * (mf.d - mf.c) : hi;
    if (mf.a < mf.b) push_linear(segs, mf.a, rise_end, 0.0, alpha, lo, hi);
    push_const(segs, rise_end, fall_start, alpha, lo, hi);
    if (mf.c < mf.d) push_linear(segs, fall_start, mf.d, alpha, 0.0, lo, hi);
  } else {
    const double rise_end = (mf.a < mf.b) ? mf.a + alpha * (mf.b - mf.a) : mf.a;
    const double fall_start = (mf.b < mf.c) ? mf.c - alpha * (mf.c - mf.b) : mf.b;
    if (mf.a < mf.b) push_linear(segs, mf.a, rise_end, 0.0, alpha, lo, hi);
    push_const(segs, rise_end, fall_start, alpha, lo, hi);
    if (mf.b < mf.c) push_linear(segs, fall_start, mf.c, alpha, 0.0, lo, hi);
  }
}

struct Envelope {
  std::vector<std::pair<const MembershipFunction*, double>> sets;  // (mf, clip)

  double operator()(double x) const {
    double y = 0.0;
    for (const auto& [mf, alpha] : sets) y = std::max(y, std::min(alpha, eval_membership(*mf, x)));
    return y;
  }
};

Envelope make_envelope(const AggregatedOutput& agg, const LinguisticVariable& out_var) {
  Envelope env;
  bool any_positive = false;
  for (const auto& [level, strength] : agg.strengths) {
    if (!std::isfinite(strength) || strength < 0.0 || strength > 1.0)
      raise(errc::invariant_violation, "aggregate strength for '" + level + "' outside [0,1]");
    const MembershipFunction* mf = out_var.find_level(level);
    if (!mf)
      raise(errc::unknown_level,
            "output variable '" + out_var.name + "' has no level '" + level + "'");
    if (strength > 0.0) {
      env.sets.emplace_back(mf, strength);
      any_positive = true;
    }
  }
  if (!any_positive) raise(errc::empty_aggregate, "all aggregate strengths are zero");
  return env;
}

}  // namespace

double defuzzify_centroid(const AggregatedOutput& agg, const LinguisticVariable& out_var) {
  const Envelope env = make_envelope(agg, out_var);
  const double lo = out_var.lo, hi = out_var.hi;

  std::vector<Segment> segs;
  for (const auto& [mf, alpha] : env.sets) clipped_pieces(*mf, alpha, lo, hi, segs);

  // The envelope is linear between consecutive cuts: piece endpoints plus
  // every pairwise intersection of the pieces' carrier lines.
  std::vector<double> cuts{lo, hi};
  for (const auto& s : segs) {
    cuts.push_back(s.x0);
    cuts.push_back(s.x1);
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].m == segs[j].m) continue;
      const double xi = (segs[j].q - segs[i].q) / (segs[i].m - segs[j].m);
      if (xi > std::max(segs[i].x0, segs[j].x0) && xi < std::min(segs[i].x1, segs[j].x1))
        cuts.push_back(xi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Exact integration of each linear stretch. The envelope may jump at a cut
  // (vertical membership edges), so sample two interior points and extend the
  // line they define to the interval ends.
  double area = 0.0, moment = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double x0 = cuts[k], x1 = cuts[k + 1];
    const double w = x1 - x0;
    if (!(w > 0.0)) continue;
    const double t1 = x0 + w / 3.0, t2 = x0 + 2.0 * w / 3.0;
    const double y1 = env(t1), y2 = env(t2);
    const double m = (y2 - y1) / (t2 - t1);
    const double q = y1 - m * t1;
    area += m * (x1 * x1 - x0 * x0) / 2.0 + q * w;
    moment += m * (x1 * x1 * x1 - x0 * x0 * x0) / 3.0 + q * (x1 * x1 - x0 * x0) / 2.0;
  }
  if (!(area > 0.0)) raise(errc::empty_aggregate, "aggregated fuzzy set has zero area");
  return std::clamp(moment / area, lo, hi);
}

double defuzzify_numeric_oracle(const AggregatedOutput& agg, const LinguisticVariable& out_var,
                                double step) {
  if (!(step > 0.0)) raise(errc::invariant_violation, "sampling step must be positive");
  const Envelope env = make_envelope(agg, out_var);

  const auto n = static_cast<std::size_t>(std::floor((out_var.hi - out_var.lo) / step + 1e-9));
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = out_var.lo + static_cast<double>(k) * step;
    const double mu = env(x);
    num += x * mu;
    den += mu;
  }
  if (!(den > 0.0)) raise(errc::empty_aggregate, "aggregated fuzzy set has zero mass");
  return num / den;
}

}  // namespace msqa::fuzzy
