#pragma once

#include <stdexcept>
#include <string>

namespace hzeta {

// Argument outside the mathematical domain of an operation. The message names
// the violated constraint.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed to deliver its contract (bracket lost,
// iteration did not converge, extra sign change found, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature stopped before meeting its tolerance.
class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, double estimate, double achieved_error)
      : NumericError(what), estimate_(estimate), achieved_error_(achieved_error) {}

  double estimate() const { return estimate_; }
  double achieved_error() const { return achieved_error_; }

 private:
  double estimate_;
  double achieved_error_;
};

}  // namespace hzeta
