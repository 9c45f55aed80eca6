#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

// Core vocabulary and semantics: fluents, propositional formulas, timed
// formulas, timed models, and the detection of changes and surprises in a
// model.  Everything here is an immutable value; all operations are pure.

namespace tempabd {

using TimePoint = int;

bool is_valid_var_name(const std::string& name);

// A fluent is a propositional variable or its negation.  Negation is an
// involution; surprises and changes are stated on fluents, not variables,
// so the two polarities are first-class.
struct Fluent {
  std::string var;
  bool positive = true;

  Fluent negation() const { return Fluent{var, !positive}; }
  std::string to_string() const { return positive ? var : "!" + var; }

  friend bool operator==(const Fluent&, const Fluent&) = default;
  friend std::strong_ordering operator<=>(const Fluent& a, const Fluent& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    // positive sorts before negative: "a" < "!a"
    return (a.positive ? 0 : 1) <=> (b.positive ? 0 : 1);
  }
};

// Immutable propositional formula over named variables, with the usual
// connectives and the constants true/false.  Shared-subtree value type;
// cheap to copy.
class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Var, Not, And, Or, Implies, Iff };

  Formula();  // defaults to the constant true

  static Formula constant(bool value);
  static Formula var(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& var_name() const;  // Kind::Var only
  Formula child() const;                // Kind::Not only
  Formula left() const;                 // binary kinds only
  Formula right() const;

  bool evaluate(const std::function<bool(const std::string&)>& value_of) const;
  void collect_vars(std::set<std::string>& out) const;
  std::vector<std::string> vars() const;  // sorted, unique

  // True when the negation normal form of the formula (after rewriting ->
  // and <-> away) contains a disjunction.  Purely syntactic.
  bool nnf_has_disjunction() const;

  // ASCII rendering with minimal parentheses; precedence ! > & > | > -> > <->,
  // -> and <-> associate to the right.
  std::string to_string() const;

  // Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// [t]phi, or the interval form [t,t']phi which abbreviates the conjunction
// of [u]phi for u in {t,...,t'}.
struct TimedFormula {
  TimePoint from = 0;
  TimePoint to = 0;  // == from for the elementary form
  Formula body;

  static TimedFormula at(TimePoint t, Formula body);
  static TimedFormula over(TimePoint from, TimePoint to, Formula body);
};

// Total truth assignment for every (variable, time point) pair on the grid
// vars x {0..t_max}.
class TimedModel {
 public:
  TimedModel() = default;
  TimedModel(std::vector<std::string> vars, TimePoint t_max);

  TimePoint t_max() const { return t_max_; }
  const std::vector<std::string>& vars() const { return vars_; }

  int var_index(const std::string& var) const;  // -1 when absent

  bool value(const std::string& var, TimePoint t) const;  // DomainError off grid
  void set(const std::string& var, TimePoint t, bool v);

  bool value_at(int var_idx, TimePoint t) const;
  void set_at(int var_idx, TimePoint t, bool v);

  bool holds(const Fluent& f, TimePoint t) const;

  friend bool operator==(const TimedModel&, const TimedModel&) = default;

 private:
  std::vector<std::string> vars_;  // sorted, unique
  TimePoint t_max_ = 0;
  std::vector<std::uint8_t> values_;
};

// Fluent f held at t-1 and its negation holds at t.
struct Change {
  Fluent fluent;
  TimePoint t = 1;

  std::string to_string() const;

  friend bool operator==(const Change&, const Change&) = default;
  friend std::strong_ordering operator<=>(const Change&, const Change&) = default;
};

// Fluent f held at t and changed at least once within (t, t'].  Read
// disjunctively over the interior time points.
struct Surprise {
  Fluent fluent;
  TimePoint from = 0;
  TimePoint to = 1;

  std::string to_string() const;

  friend bool operator==(const Surprise&, const Surprise&) = default;
  friend std::strong_ordering operator<=>(const Surprise&, const Surprise&) = default;
};

// M |= [t]phi under the compositional semantics.
bool eval(const TimedModel& m, TimePoint t, const Formula& body);
bool eval(const TimedModel& m, const TimedFormula& tf);

// All changes in M, both polarities of every variable, in canonical order.
std::vector<Change> changes(const TimedModel& m);

// M |= [t]f and not M |= [t,t']f.  Requires t < t2.
bool is_surprise(const TimedModel& m, const Fluent& f, TimePoint t, TimePoint t2);

}  // namespace tempabd
