#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "specmat/complex_matrix.hpp"

namespace specmat {

/// An entire function F together with the derivative rule the confluent
/// interpolation needs. Values are immutable; time_scaled() returns the
/// composed function lambda -> F(t lambda).
class ScalarFunction {
 public:
  enum class Kind { exp, sin, cos, monomial, polynomial, tabulated };

  static ScalarFunction exp();
  static ScalarFunction sin();
  static ScalarFunction cos();
  /// lambda^power
  static ScalarFunction monomial(unsigned power);
  /// c_0 + c_1 lambda + ... (c_0 first)
  static ScalarFunction polynomial(std::vector<Complex> coeffs);
  /// Caller-supplied values with no derivative information. Only usable on
  /// spectra without repeated eigenvalues.
  static ScalarFunction tabulated(std::function<Complex(Complex)> values);

  Kind kind() const noexcept { return kind_; }
  bool supports_derivatives() const noexcept { return kind_ != Kind::tabulated; }
  unsigned monomial_power() const noexcept { return power_; }
  std::span<const Complex> polynomial_coefficients() const noexcept { return coeffs_; }
  /// The t of F(t lambda); 1 for a freshly built function.
  double time_scale() const noexcept { return scale_; }

  Complex value(Complex z) const;
  /// d^order/dz^order of F(t z). Throws UnsupportedFunctionError for order > 0
  /// on a tabulated function.
  Complex derivative(Complex z, unsigned order) const;

  ScalarFunction time_scaled(double t) const;

  /// "exp", "sin", "cos", "monomial(3)", "poly", "tabulated"
  std::string name() const;

 private:
  explicit ScalarFunction(Kind kind) : kind_(kind) {}

  // Derivative of the unscaled function at w.
  Complex base_derivative(Complex w, unsigned order) const;

  Kind kind_;
  unsigned power_ = 0;
  std::vector<Complex> coeffs_;
  std::function<Complex(Complex)> table_;
  double scale_ = 1.0;
};

}  // namespace specmat
