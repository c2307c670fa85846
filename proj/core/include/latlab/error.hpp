#pragma once

#include <stdexcept>
#include <string>

namespace latlab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (Y1 at 0, zeta pole, Re s <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument outside a table or grid (x beyond the sieve limit, sieve above cap).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Series or quadrature failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A configured cost limit (term cap, contour height, wall clock) was exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Calibration fit violates a structural constraint.
class FitError : public Error {
 public:
  using Error::Error;
};

// Malformed key = value config text or command-line grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace latlab
