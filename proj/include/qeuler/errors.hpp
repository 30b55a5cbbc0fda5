#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Bad argument or evaluation point outside the mathematical domain.
/// CLI maps this family to exit code 2.
class InvalidParameterError : public std::invalid_argument {
 public:
  explicit InvalidParameterError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A denominator factor 1 + q^e vanished for an exponent in the
/// denominator support of the requested index.
class PoleError : public InvalidParameterError {
 public:
  PoleError(const std::string& what, long exponent)
      : InvalidParameterError(what), exponent_(exponent) {}
  long exponent() const { return exponent_; }

 private:
  long exponent_;
};

/// Requested computation exceeds the configured operation budget.
/// CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A series or quadrature failed to reach the requested tolerance within
/// its term/depth limit; carries the bound that was achieved.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double achieved_bound)
      : std::runtime_error(what), achieved_bound_(achieved_bound) {}
  double achieved_bound() const { return achieved_bound_; }

 private:
  double achieved_bound_;
};

class UnknownIdentityError : public InvalidParameterError {
 public:
  explicit UnknownIdentityError(const std::string& id)
      : InvalidParameterError("unknown identity id: " + id) {}
};

}  // namespace qeuler
