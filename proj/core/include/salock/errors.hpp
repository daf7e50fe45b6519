#pragma once

#include <stdexcept>
#include <string>

namespace salock {

/// Bad inputs: violated preconditions, malformed specs or files.
/// CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numeric infeasibility discovered while computing: vacuous bounds,
/// unreachable thresholds, blow-ups, infeasible conditioning.
/// CLI maps these to exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace salock
