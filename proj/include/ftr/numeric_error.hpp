#pragma once

#include <stdexcept>
#include <string>

namespace ftr {

/// Thrown when an iterative numeric routine (series summation, adaptive
/// quadrature) exhausts its budget before reaching the requested tolerance.
/// Carries the best estimate computed so far and a bound on its error.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double partial_value, double error_bound)
      : std::runtime_error(what), partial_value_(partial_value), error_bound_(error_bound) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double partial_value_;
  double error_bound_;
};

}  // namespace ftr
