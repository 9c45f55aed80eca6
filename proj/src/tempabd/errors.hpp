#pragma once

#include <stdexcept>
#include <string>

namespace tempabd {

// Base class for all expected, user-facing failures (bad input, bad
// parameters, out-of-bounds problem sizes).  The CLI maps these to exit
// code 1.  Internal invariant violations are reported as std::logic_error
// and map to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation outside the declared grid (unknown variable, off-scale time).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed call arguments (t >= t', non-minimal compactify input, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Invalid probability parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Enumeration bound exceeded (brute-force engines, subset search).
class ScaleError : public Error {
 public:
  using Error::Error;
};

// The scenario is unsatisfiable at a single time point, so no removal of
// persistence assumptions can explain it.
class UnexplainableScenarioError : public Error {
 public:
  using Error::Error;
};

// All candidate explanations have zero prior weight.
class DegenerateScenarioError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an observation set of probability zero.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tempabd
