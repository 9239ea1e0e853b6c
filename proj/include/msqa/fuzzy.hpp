#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msqa/errors.hpp"

// Membership-function algebra, fuzzification, Mamdani max-min inference and
// centroid defuzzification. All types are immutable value types once built;
// every operation is a pure function, safe to call from any thread.

namespace msqa::fuzzy {

/// Piecewise-linear fuzzy set over one axis: a trapezoid (a<=b<=c<=d) or a
/// triangle (a<=b<=c). Vertical edges (a==b or c==d) are permitted; a
/// trapezoid whose right edge is vertical keeps its plateau value for x > d,
/// so a shoulder pinned at the top of the axis stays at 1 beyond it.
struct MembershipFunction {
  enum class Shape { trapezoid, triangle };

  Shape shape = Shape::trapezoid;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;  // triangle ignores d (kept == c)

  static MembershipFunction trapezoid(double a, double b, double c, double d);
  static MembershipFunction triangle(double a, double b, double c);

  bool operator==(const MembershipFunction&) const = default;
};

/// Membership degree of x in [0,1]. x must be finite and non-negative.
double eval_membership(const MembershipFunction& mf, double x);

/// A named axis with a closed universe [lo, hi] and one membership function
/// per linguistic level, in declaration order.
struct LinguisticVariable {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::pair<std::string, MembershipFunction>> levels;

  const MembershipFunction* find_level(const std::string& level) const;
  /// Checks lo < hi, unique level names, breakpoints inside the universe.
  void validate() const;

  bool operator==(const LinguisticVariable&) const = default;
};

/// Convenience builder for the standard LOW/MED/HIGH layout over [0, top]:
/// LOW = trapezoid(0,0,q1,q2), MED = triangle(q1,q2,q3),
/// HIGH = trapezoid(q2,q3,top,top). With q1<q2<q3 the three degrees sum to 1
/// at every point of the universe.
LinguisticVariable three_level_partition(std::string name, double q1, double q2,
                                         double q3, double top);

/// Membership degrees per level, each in [0,1], in the variable's level order.
struct FuzzyValue {
  std::vector<std::pair<std::string, double>> degrees;

  double at(const std::string& level) const;  // throws unknown_level
  double sum() const;

  bool operator==(const FuzzyValue&) const = default;
};

/// Degrees of x in every level of var. x above the universe top is clamped to
/// it before evaluation; negative x is an error.
FuzzyValue fuzzify(const LinguisticVariable& var, double x);

/// IF-THEN rule: antecedent is an ordered list of (variable, level) terms.
struct Rule {
  std::vector<std::pair<std::string, std::string>> antecedent;
  std::string consequent;
  std::string id;

  bool operator==(const Rule&) const = default;
};

struct RuleBase {
  std::vector<std::string> input_variables;
  std::vector<Rule> rules;
  std::vector<std::string> output_levels;

  /// Checks: every rule covers exactly the declared input variables in order,
  /// no two rules share an antecedent tuple, consequents are declared levels.
  void validate() const;

  bool operator==(const RuleBase&) const = default;
};

using FuzzyInputs = std::map<std::string, FuzzyValue>;

/// Mamdani implication: min over antecedent membership degrees.
double rule_strength(const Rule& rule, const FuzzyInputs& inputs);

struct FiredRule {
  std::size_t rule_index = 0;
  std::string id;
  double strength = 0.0;

  bool operator==(const FiredRule&) const = default;
};

/// Per consequent level, the max strength over the rules that fired for it.
struct AggregatedOutput {
  std::vector<std::pair<std::string, double>> strengths;
  std::vector<FiredRule> fired;

  double strength_of(const std::string& level) const;  // 0 when absent
};

/// Runs every rule against the inputs; rules at strength 0 are not recorded.
/// Throws no_rule_fired when nothing fires (an incomplete table, or inputs
/// outside every antecedent).
AggregatedOutput infer(const RuleBase& rb, const FuzzyInputs& inputs);

/// Crisp value of the aggregate as the center of gravity of the envelope
///   mu(x) = max over levels of min(strength, level membership at x)
/// over the output universe. Exact: the universe is split at every breakpoint
/// and pairwise intersection of the clipped segments and each linear piece is
/// integrated in closed form. Throws empty_aggregate when all strengths are 0.
double defuzzify_centroid(const AggregatedOutput& agg, const LinguisticVariable& out_var);

/// Riemann-sum centroid sampled every `step` across the universe. Kept as an
/// independent check on the analytic path; agreement within 0.01 absolute at
/// step 0.001 is part of the library's contract.
double defuzzify_numeric_oracle(const AggregatedOutput& agg, const LinguisticVariable& out_var,
                                double step = 0.001);

}  // namespace msqa::fuzzy
