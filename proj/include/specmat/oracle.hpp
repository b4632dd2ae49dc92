#pragma once

#include "specmat/complex_matrix.hpp"
#include "specmat/scalar_function.hpp"

namespace specmat {

/// Reference implementations that share nothing with the interpolation
/// machinery: scaling and squaring over a truncated Taylor series.
struct OracleConfig {
  /// Relative size of the last Taylor term kept; must lie in (0, 1e-2].
  double target_tolerance = 1e-13;
  /// At most 60.
  unsigned max_squarings = 40;

  void validate() const;
};

/// e^A. Scales A by 2^-s until ||A||_F / 2^s <= 0.5, sums the Taylor series,
/// then squares s times.
Matrix oracle_expm(const Matrix& a, const OracleConfig& cfg = {});

/// F(A) for the built-in kinds: exp directly, sin and cos from e^{iA} and
/// e^{-iA}, monomials and polynomials by plain multiplication. A time-scaled
/// function evaluates F(tA). Tabulated functions throw UnsupportedFunctionError.
Matrix oracle_matfun(const Matrix& a, const ScalarFunction& fn, const OracleConfig& cfg = {});

}  // namespace specmat
