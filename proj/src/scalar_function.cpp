#include "specmat/scalar_function.hpp"

#include <cmath>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

ScalarFunction ScalarFunction::exp() { return ScalarFunction(Kind::exp); }
ScalarFunction ScalarFunction::sin() { return ScalarFunction(Kind::sin); }
ScalarFunction ScalarFunction::cos() { return ScalarFunction(Kind::cos); }

ScalarFunction ScalarFunction::monomial(unsigned power) {
  ScalarFunction f(Kind::monomial);
  f.power_ = power;
  return f;
}

ScalarFunction ScalarFunction::polynomial(std::vector<Complex> coeffs) {
  for (const Complex c : coeffs) {
    if (!is_finite(c)) throw NonFiniteError("ScalarFunction::polynomial: non-finite coefficient");
  }
  ScalarFunction f(Kind::polynomial);
  f.coeffs_ = std::move(coeffs);
  return f;
}

ScalarFunction ScalarFunction::tabulated(std::function<Complex(Complex)> values) {
  if (!values) throw DomainError("ScalarFunction::tabulated: empty callable");
  ScalarFunction f(Kind::tabulated);
  f.table_ = std::move(values);
  return f;
}

ScalarFunction ScalarFunction::time_scaled(double t) const {
  if (!std::isfinite(t)) throw NonFiniteError("ScalarFunction::time_scaled: non-finite t");
  ScalarFunction f = *this;
  f.scale_ *= t;
  return f;
}

Complex ScalarFunction::value(Complex z) const { return derivative(z, 0); }

Complex ScalarFunction::derivative(Complex z, unsigned order) const {
  if (kind_ == Kind::tabulated && order > 0) {
    throw UnsupportedFunctionError("tabulated function has no derivative data");
  }
  // Chain rule for F(t z): t^order F^(order)(t z).
  const Complex d = base_derivative(scale_ * z, order);
  return order == 0 ? d : d * std::pow(scale_, static_cast<int>(order));
}

Complex ScalarFunction::base_derivative(Complex w, unsigned order) const {
  switch (kind_) {
    case Kind::exp:
      return std::exp(w);
    case Kind::sin:
      // sin, cos, -sin, -cos, ...
      switch (order % 4) {
        case 0: return std::sin(w);
        case 1: return std::cos(w);
        case 2: return -std::sin(w);
        default: return -std::cos(w);
      }
    case Kind::cos:
      switch (order % 4) {
        case 0: return std::cos(w);
        case 1: return -std::sin(w);
        case 2: return -std::cos(w);
        default: return std::sin(w);
      }
    case Kind::monomial: {
      if (order > power_) return 0.0;
      double falling = 1.0;
      for (unsigned k = 0; k < order; ++k) falling *= static_cast<double>(power_ - k);
      Complex p = 1.0;
      for (unsigned k = 0; k < power_ - order; ++k) p *= w;
      return falling * p;
    }
    case Kind::polynomial: {
      // Horner on the order-th derivative's coefficients.
      Complex acc = 0.0;
      for (std::size_t j = coeffs_.size(); j-- > order;) {
        double falling = 1.0;
        for (unsigned k = 0; k < order; ++k) falling *= static_cast<double>(j - k);
        acc = acc * w + falling * coeffs_[j];
      }
      return acc;
    }
    case Kind::tabulated:
      return table_(w);
  }
  return 0.0;
}

std::string ScalarFunction::name() const {
  switch (kind_) {
    case Kind::exp: return "exp";
    case Kind::sin: return "sin";
    case Kind::cos: return "cos";
    case Kind::monomial: return "monomial(" + std::to_string(power_) + ")";
    case Kind::polynomial: return "poly";
    case Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

}  // namespace specmat
