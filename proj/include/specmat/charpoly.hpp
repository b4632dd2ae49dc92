#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "specmat/complex_matrix.hpp"

namespace specmat {

/// Monic polynomial lambda^n + p_1 lambda^{n-1} + ... + p_n, stored as p_1..p_n.
class CharacteristicPolynomial {
 public:
  /// Faddeev-LeVerrier loses digits quickly past this degree.
  static constexpr std::size_t kStableDegreeLimit = 12;

  explicit CharacteristicPolynomial(std::vector<Complex> p);

  /// Expands prod_k (lambda - roots[k]).
  static CharacteristicPolynomial from_roots(std::span<const Complex> roots);

  std::size_t degree() const noexcept { return p_.size(); }
  /// p_j for 1 <= j <= n; p_0 is the leading 1.
  Complex coefficient(std::size_t j) const noexcept { return j == 0 ? Complex{1.0} : p_[j - 1]; }
  std::span<const Complex> coefficients() const noexcept { return p_; }

  Complex evaluate(Complex lambda) const noexcept;
  /// Value and first derivative in one Horner pass.
  std::pair<Complex, Complex> evaluate_with_derivative(Complex lambda) const noexcept;
  /// max(1, max_j |p_j|), the scale the root residual bound is measured against.
  double coefficient_scale() const noexcept;

  /// Set when the polynomial came from a matrix larger than kStableDegreeLimit.
  bool precision_warning() const noexcept { return precision_warning_; }
  void set_precision_warning(bool on) noexcept { precision_warning_ = on; }

  friend bool operator==(const CharacteristicPolynomial& a, const CharacteristicPolynomial& b) {
    return a.p_ == b.p_;
  }

 private:
  std::vector<Complex> p_;
  bool precision_warning_ = false;
};

/// Quotient of p by (lambda - node). q[0] = 1 and q[j] = (p_j)_k when node is
/// exactly the root alpha_k, i.e. p_j with every term containing alpha_k removed.
struct DeflatedCoefficients {
  Complex node;
  std::vector<Complex> q;
  /// p(node); zero when node is an exact root.
  Complex remainder;
};

/// det(lambda E - A) by the Faddeev-LeVerrier recurrence.
CharacteristicPolynomial char_poly(const Matrix& a);

/// Unit subdiagonal, last column (-p_n, ..., -p_1)^T.
Matrix companion(const CharacteristicPolynomial& p);

/// Synthetic division q_j = p_j + node * q_{j-1}.
DeflatedCoefficients deflate(const CharacteristicPolynomial& p, Complex node);

/// L^m e_1 for the companion matrix L of p, without forming L^m. These are the
/// coordinates c with A^m = sum_l c_l A^l for any A whose characteristic
/// polynomial is p.
std::vector<Complex> power_column(const CharacteristicPolynomial& p, std::size_t m);

}  // namespace specmat
