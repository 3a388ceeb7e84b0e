#pragma once

#include <stdexcept>
#include <string>

namespace expot {

/// Input outside the mathematical domain of an operation (bad parameter,
/// gamma pole, non-positive argument).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested normalization of a state whose norm integral diverges (eps <= 0).
class DivergentNormError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure failed to reach its accuracy target. Carries the
/// best estimate obtained before giving up.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace expot
