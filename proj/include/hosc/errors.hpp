#pragma once

#include <stdexcept>
#include <string>

namespace hosc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Request the implementation does not cover (e.g. a divergent series).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Malformed textual input (state JSON, config files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical integration failed to reach its tolerance. Carries the best estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double abs_error)
      : std::runtime_error(what), best_value_(best_value), abs_error_(abs_error) {}
  double best_value() const noexcept { return best_value_; }
  double abs_error() const noexcept { return abs_error_; }

 private:
  double best_value_;
  double abs_error_;
};

}  // namespace hosc
