#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempabd/timed_logic.hpp"

// The textual scenario format: horizon, timed observations, and per-variable
// probability parameters.  This file format is the only persistent input of
// the system.
//
//   tmax 20                # optional; defaults to the largest observation time
//   obs 0: a & b           # one elementary observation per line
//   obs 2..4: !c           # interval form, expands pointwise
//   fluent a { p0=0.5, eps=0.001, eps_neg=0.002, stationary }
//
// Formula syntax: !, &, |, ->, <->, parentheses, true, false.  Precedence
// ! > & > | > -> > <->; the arrows associate to the right.  '#' starts a
// comment.  ASCII only.

namespace tempabd {

struct Observation {
  TimePoint t = 0;
  Formula body;

  friend bool operator==(const Observation& a, const Observation& b) { return a.t == b.t && a.body == b.body; }
};

// A set of elementary timed observations over the scale {0..t_max}.
// Observations are kept in canonical order (time, then rendered text) with
// structural duplicates removed; distinct observations at one time point
// stay separate and are semantically conjoined.
class Scenario {
 public:
  Scenario() = default;
  Scenario(TimePoint t_max, std::vector<Observation> observations);

  TimePoint t_max() const { return t_max_; }
  const std::vector<Observation>& observations() const { return observations_; }
  const std::vector<std::string>& vars() const { return vars_; }  // V, sorted
  bool empty() const { return observations_.empty(); }

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.t_max_ == b.t_max_ && a.observations_ == b.observations_;
  }

 private:
  TimePoint t_max_ = 0;
  std::vector<Observation> observations_;
  std::vector<std::string> vars_;
};

bool satisfies(const TimedModel& m, const Scenario& scenario);

// Per-variable probability parameters as declared in the source text.
struct FluentParams {
  double p0 = 0.5;
  double eps_pos = 1e-4;
  std::optional<double> eps_neg;
  bool stationary = true;
};

struct ScenarioDoc {
  Scenario scenario;
  std::map<std::string, FluentParams> params;
};

// Parses the scenario format; every rejection carries a line:column position.
ScenarioDoc parse_scenario(std::string_view text);

// Canonical text: tmax line, observations sorted by (time, text), fluent
// declarations sorted by variable.  parse(render(doc)) == normalize(doc),
// and render is a fixed point on its own output.
std::string render_scenario(const ScenarioDoc& doc);

std::string render_double(double x);  // shortest round-trip decimal form

}  // namespace tempabd
