#pragma once

#include <stdexcept>
#include <string>

namespace entroverify {

/// Raised when an input violates a documented invariant (non-Hermitian
/// matrix, dimension mismatch, order outside a theorem's range, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by iterative solvers that fail to converge on every restart.
/// Carries the best objective value seen so the caller can still report it.
class OptimizerError : public std::runtime_error {
 public:
  OptimizerError(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Raised for unreadable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entroverify
