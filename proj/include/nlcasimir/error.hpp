#pragma once

#include <stdexcept>
#include <string>

namespace nlcasimir {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was evaluated outside its mathematical domain (poles, branch
// points, k = 0 for Lindhard, Q = 0 for the long-wavelength correction).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid or inconsistent user-supplied parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A model produced a non-physical state, e.g. a Lifshitz denominator <= 0.
class ModelError : public Error {
 public:
  using Error::Error;
};

// Ill-conditioned input such as a vanishing net induced charge.
class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& what, double magnitude)
      : Error(what), magnitude_(magnitude) {}
  double magnitude() const { return magnitude_; }

 private:
  double magnitude_;
};

// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate)
      : Error(what), value_(value), error_estimate_(error_estimate) {}
  double value() const { return value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

// The integrand returned NaN/inf at `abscissa`.
class IntegrandError : public Error {
 public:
  IntegrandError(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

}  // namespace nlcasimir
