#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specmat/complex_matrix.hpp"

namespace specmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together; always a caller bug.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinity reached a public entry point.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain (negative tolerance, bad config...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The distinct-eigenvalue formula was asked to divide by a vanishing gap.
class CoincidentEigenvaluesError : public Error {
 public:
  using Error::Error;
};

/// The scalar function cannot provide what the caller requested
/// (derivatives of a tabulated function, for instance).
class UnsupportedFunctionError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver gave up. Carries the best iterate it had.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<Complex> best_iterate,
                   std::vector<double> residuals)
      : Error(what), best_iterate_(std::move(best_iterate)), residuals_(std::move(residuals)) {}

  const std::vector<Complex>& best_iterate() const noexcept { return best_iterate_; }
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<Complex> best_iterate_;
  std::vector<double> residuals_;
};

}  // namespace specmat
