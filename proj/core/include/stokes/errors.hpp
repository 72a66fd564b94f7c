#pragma once

#include <stdexcept>
#include <string>

namespace stokes {

// Precondition or parameter invariant violated.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature did not reach its tolerance within the subdivision cap.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace stokes
