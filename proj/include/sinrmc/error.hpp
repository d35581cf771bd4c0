#pragma once

#include <stdexcept>
#include <string>

namespace sinrmc {

/// Invalid model, estimator, or sampling parameter.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical solver failed to bracket or converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cross-entropy pilot saw no replicate in which the event occurred.
class NoHitsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Likelihood ratio is undefined (zero tilted intensity at a sampled point)
/// or would overflow double precision.
class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration input. `line()` is 1-based, 0 for command-line flags.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace sinrmc
