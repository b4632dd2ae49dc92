#include "specmat/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

CharacteristicPolynomial::CharacteristicPolynomial(std::vector<Complex> p) : p_(std::move(p)) {
  if (p_.empty()) throw DimensionError("CharacteristicPolynomial: degree must be positive");
  for (std::size_t j = 0; j < p_.size(); ++j) {
    if (!is_finite(p_[j])) {
      throw NonFiniteError("CharacteristicPolynomial: non-finite p_" + std::to_string(j + 1));
    }
  }
}

CharacteristicPolynomial CharacteristicPolynomial::from_roots(std::span<const Complex> roots) {
  // Coefficients of the monic product, leading 1 first.
  std::vector<Complex> c{1.0};
  for (const Complex r : roots) {
    c.push_back(0.0);
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] -= r * c[j - 1];
  }
  return CharacteristicPolynomial(std::vector<Complex>(c.begin() + 1, c.end()));
}

Complex CharacteristicPolynomial::evaluate(Complex lambda) const noexcept {
  Complex acc = 1.0;
  for (const Complex pj : p_) acc = acc * lambda + pj;
  return acc;
}

std::pair<Complex, Complex> CharacteristicPolynomial::evaluate_with_derivative(
    Complex lambda) const noexcept {
  Complex value = 1.0;
  Complex deriv = 0.0;
  for (const Complex pj : p_) {
    deriv = deriv * lambda + value;
    value = value * lambda + pj;
  }
  return {value, deriv};
}

double CharacteristicPolynomial::coefficient_scale() const noexcept {
  double s = 1.0;
  for (const Complex pj : p_) s = std::max(s, std::abs(pj));
  return s;
}

CharacteristicPolynomial char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Complex> p(n);
  // M_1 = I, p_k = -tr(A M_k)/k, M_{k+1} = A M_k + p_k I.
  Matrix m = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = mat_mul(a, m);
    p[k - 1] = -trace(am) / static_cast<double>(k);
    if (k < n) m = add_identity(am, p[k - 1]);
  }
  CharacteristicPolynomial result(std::move(p));
  result.set_precision_warning(n > CharacteristicPolynomial::kStableDegreeLimit);
  return result;
}

Matrix companion(const CharacteristicPolynomial& p) {
  const std::size_t n = p.degree();
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 1; i < n; ++i) entries[i * n + (i - 1)] = 1.0;
  for (std::size_t i = 0; i < n; ++i) entries[i * n + (n - 1)] = -p.coefficient(n - i);
  return Matrix(n, std::move(entries));
}

DeflatedCoefficients deflate(const CharacteristicPolynomial& p, Complex node) {
  const std::size_t n = p.degree();
  DeflatedCoefficients out{node, std::vector<Complex>(n), 0.0};
  out.q[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) out.q[j] = p.coefficient(j) + node * out.q[j - 1];
  out.remainder = p.coefficient(n) + node * out.q[n - 1];
  return out;
}

std::vector<Complex> power_column(const CharacteristicPolynomial& p, std::size_t m) {
  const std::size_t n = p.degree();
  std::vector<Complex> v(n);
  v[0] = 1.0;
  std::vector<Complex> next(n);
  for (std::size_t step = 0; step < m; ++step) {
    // (L v)_0 = -p_n v_{n-1};  (L v)_i = v_{i-1} - p_{n-i} v_{n-1}.
    const Complex last = v[n - 1];
    next[0] = -p.coefficient(n) * last;
    for (std::size_t i = 1; i < n; ++i) next[i] = v[i - 1] - p.coefficient(n - i) * last;
    std::swap(v, next);
  }
  return v;
}

}  // namespace specmat
