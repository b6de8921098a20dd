#pragma once

#include <stdexcept>
#include <string>

namespace starkcp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (n < 1, r <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration: unknown unit token, unknown constant name, invalid value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Request outside what an implementation supports (e.g. analytic table for n > 2).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Perturbation theory hit a vanishing energy denominator.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Quadrature or extrapolation failed to reach its tolerance.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double estimate, double achieved_error)
      : Error(what), estimate_(estimate), achieved_error_(achieved_error) {}

  double estimate() const noexcept { return estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double estimate_;
  double achieved_error_;
};

}  // namespace starkcp
