#include "tempabd/timed_logic.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "tempabd/errors.hpp"

namespace tempabd {

bool is_valid_var_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

struct Formula::Node {
  Kind kind;
  std::string name;  // Kind::Var
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

const std::shared_ptr<const Formula::Node>& true_node() {
  static const auto node =
      std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::True, "", nullptr, nullptr});
  return node;
}

const std::shared_ptr<const Formula::Node>& false_node() {
  static const auto node =
      std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::False, "", nullptr, nullptr});
  return node;
}

}  // namespace

Formula::Formula() : node_(true_node()) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) { return Formula(value ? true_node() : false_node()); }

Formula Formula::var(std::string name) {
  if (!is_valid_var_name(name)) throw ArgumentError("invalid variable name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, "", std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::And, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Or, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Implies, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::Iff, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::var_name() const { return node_->name; }

Formula Formula::child() const { return Formula(node_->a); }

Formula Formula::left() const { return Formula(node_->a); }

Formula Formula::right() const { return Formula(node_->b); }

bool Formula::evaluate(const std::function<bool(const std::string&)>& value_of) const {
  switch (node_->kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Var:
      return value_of(node_->name);
    case Kind::Not:
      return !child().evaluate(value_of);
    case Kind::And:
      return left().evaluate(value_of) && right().evaluate(value_of);
    case Kind::Or:
      return left().evaluate(value_of) || right().evaluate(value_of);
    case Kind::Implies:
      return !left().evaluate(value_of) || right().evaluate(value_of);
    case Kind::Iff:
      return left().evaluate(value_of) == right().evaluate(value_of);
  }
  throw std::logic_error("unreachable formula kind");
}

void Formula::collect_vars(std::set<std::string>& out) const {
  switch (node_->kind) {
    case Kind::True:
    case Kind::False:
      return;
    case Kind::Var:
      out.insert(node_->name);
      return;
    case Kind::Not:
      child().collect_vars(out);
      return;
    default:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

std::vector<std::string> Formula::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return {out.begin(), out.end()};
}

namespace {

// Would the negation normal form under this polarity contain a disjunction?
bool nnf_disjunction(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Var:
      return false;
    case Formula::Kind::Not:
      return nnf_disjunction(f.child(), !positive);
    case Formula::Kind::And:
      if (positive) return nnf_disjunction(f.left(), true) || nnf_disjunction(f.right(), true);
      return true;  // !(a & b) rewrites to !a | !b
    case Formula::Kind::Or:
      if (positive) return true;
      return nnf_disjunction(f.left(), false) || nnf_disjunction(f.right(), false);
    case Formula::Kind::Implies:
      // a -> b rewrites to !a | b; its negation to a & !b.
      if (positive) return true;
      return nnf_disjunction(f.left(), true) || nnf_disjunction(f.right(), false);
    case Formula::Kind::Iff:
      return true;  // both polarities expand with a disjunction
  }
  throw std::logic_error("unreachable formula kind");
}

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

void print(const Formula& f, std::string& out) {
  const auto wrap = [&out](const Formula& g, bool parens) {
    if (parens) out += '(';
    print(g, out);
    if (parens) out += ')';
  };
  const int level = precedence(f.kind());
  switch (f.kind()) {
    case Formula::Kind::True:
      out += "true";
      return;
    case Formula::Kind::False:
      out += "false";
      return;
    case Formula::Kind::Var:
      out += f.var_name();
      return;
    case Formula::Kind::Not:
      out += '!';
      wrap(f.child(), precedence(f.child().kind()) < level);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      // left-associative: parenthesize a right child of equal precedence
      wrap(f.left(), precedence(f.left().kind()) < level);
      out += f.kind() == Formula::Kind::And ? " & " : " | ";
      wrap(f.right(), precedence(f.right().kind()) <= level);
      return;
    }
    case Formula::Kind::Implies:
    case Formula::Kind::Iff: {
      // right-associative
      wrap(f.left(), precedence(f.left().kind()) <= level);
      out += f.kind() == Formula::Kind::Implies ? " -> " : " <-> ";
      wrap(f.right(), precedence(f.right().kind()) < level);
      return;
    }
  }
}

}  // namespace

bool Formula::nnf_has_disjunction() const { return nnf_disjunction(*this, true); }

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Var:
      return a.var_name() == b.var_name();
    case Formula::Kind::Not:
      return a.child() == b.child();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

TimedFormula TimedFormula::at(TimePoint t, Formula body) { return TimedFormula{t, t, std::move(body)}; }

TimedFormula TimedFormula::over(TimePoint from, TimePoint to, Formula body) {
  if (from > to) throw ArgumentError("timed formula interval with from > to");
  return TimedFormula{from, to, std::move(body)};
}

TimedModel::TimedModel(std::vector<std::string> vars, TimePoint t_max) : vars_(std::move(vars)), t_max_(t_max) {
  if (t_max_ < 0) throw ArgumentError("t_max must be non-negative");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (const auto& v : vars_) {
    if (!is_valid_var_name(v)) throw ArgumentError("invalid variable name '" + v + "'");
  }
  values_.assign(vars_.size() * static_cast<std::size_t>(t_max_ + 1), 0);
}

int TimedModel::var_index(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return -1;
  return static_cast<int>(it - vars_.begin());
}

bool TimedModel::value(const std::string& var, TimePoint t) const {
  const int idx = var_index(var);
  if (idx < 0) throw DomainError("variable '" + var + "' is not on the model grid");
  if (t < 0 || t > t_max_)
    throw DomainError("time point " + std::to_string(t) + " is outside the scale 0.." + std::to_string(t_max_));
  return value_at(idx, t);
}

void TimedModel::set(const std::string& var, TimePoint t, bool v) {
  const int idx = var_index(var);
  if (idx < 0) throw DomainError("variable '" + var + "' is not on the model grid");
  if (t < 0 || t > t_max_)
    throw DomainError("time point " + std::to_string(t) + " is outside the scale 0.." + std::to_string(t_max_));
  set_at(idx, t, v);
}

bool TimedModel::value_at(int var_idx, TimePoint t) const {
  return values_[static_cast<std::size_t>(var_idx) * (t_max_ + 1) + t] != 0;
}

void TimedModel::set_at(int var_idx, TimePoint t, bool v) {
  values_[static_cast<std::size_t>(var_idx) * (t_max_ + 1) + t] = v ? 1 : 0;
}

bool TimedModel::holds(const Fluent& f, TimePoint t) const { return value(f.var, t) == f.positive; }

std::string Change::to_string() const { return "<" + fluent.to_string() + "," + std::to_string(t) + ">"; }

std::string Surprise::to_string() const {
  return "<" + fluent.to_string() + "," + std::to_string(from) + "," + std::to_string(to) + ">";
}

bool eval(const TimedModel& m, TimePoint t, const Formula& body) {
  if (t < 0 || t > m.t_max())
    throw DomainError("time point " + std::to_string(t) + " is outside the scale 0.." + std::to_string(m.t_max()));
  return body.evaluate([&](const std::string& var) { return m.value(var, t); });
}

bool eval(const TimedModel& m, const TimedFormula& tf) {
  for (TimePoint u = tf.from; u <= tf.to; ++u) {
    if (!eval(m, u, tf.body)) return false;
  }
  return true;
}

std::vector<Change> changes(const TimedModel& m) {
  std::vector<Change> out;
  for (int i = 0; i < static_cast<int>(m.vars().size()); ++i) {
    for (TimePoint t = 1; t <= m.t_max(); ++t) {
      const bool before = m.value_at(i, t - 1);
      const bool after = m.value_at(i, t);
      if (before != after) {
        // the fluent that held before the flip is the one that changed
        out.push_back(Change{Fluent{m.vars()[i], before}, t});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_surprise(const TimedModel& m, const Fluent& f, TimePoint t, TimePoint t2) {
  if (t >= t2) throw ArgumentError("surprise interval requires t < t'");
  if (!m.holds(f, t)) return false;
  for (TimePoint u = t + 1; u <= t2; ++u) {
    if (!m.holds(f, u)) return true;
  }
  return false;
}

}  // namespace tempabd
