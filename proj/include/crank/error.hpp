#pragma once

#include <stdexcept>
#include <string>

namespace crank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (|q| >= 1, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A parameter the engine deliberately does not support (ell outside {1,3}, non-half-integer Bessel order, ...).
class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Work would exceed a hard cap (enumeration size, iteration count).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Index outside a computed table.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible truncation orders.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold exactly did not (signals a convention bug).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Iterative procedure stopped before reaching its target; carries the best bound achieved.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(what + " (achieved " + std::to_string(achieved) + ")"), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace crank
