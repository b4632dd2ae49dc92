#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specmat {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, row-major, immutable once built.
///
/// Every constructor rejects NaN and infinity with NonFiniteError, so any
/// matrix that exists is finite. Arithmetic that overflows therefore throws
/// instead of handing back a poisoned result.
class Matrix {
 public:
  /// Takes ownership of `entries` (row-major, length n*n).
  Matrix(std::size_t n, std::vector<Complex> entries);

  /// Convenience for literals in tests and examples.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n);
  static Matrix diagonal(std::span<const Complex> values);

  std::size_t size() const noexcept { return n_; }
  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * n_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// Coefficients f_0..f_{n-1} of F(A) = sum_l f_l A^l.
class CoefficientVector {
 public:
  CoefficientVector() = default;
  explicit CoefficientVector(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  Complex operator[](std::size_t l) const noexcept { return values_[l]; }
  std::span<const Complex> values() const noexcept { return values_; }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::vector<Complex> values_;
};

bool is_finite(Complex z) noexcept;

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Complex factor);
/// a + shift * I
Matrix add_identity(const Matrix& a, Complex shift);

Complex trace(const Matrix& a) noexcept;
/// LU with partial pivoting. Only used for invariant checks, never on the
/// evaluation path.
Complex determinant(const Matrix& a);

double frobenius_norm(const Matrix& a) noexcept;
/// ||a - b||_F / max(||b||_F, tiny); b is the reference.
double relative_frobenius_error(const Matrix& a, const Matrix& b);

/// f_0 E + f_1 A + ... + f_{n-1} A^{n-1} by Horner's scheme. Requires exactly
/// a.size() coefficients.
Matrix horner_matrix_poly(const Matrix& a, const CoefficientVector& coeffs);

/// Same scheme for a polynomial of arbitrary length (c_0 first). An empty
/// coefficient list gives the zero matrix.
Matrix matrix_polynomial(const Matrix& a, std::span<const Complex> coeffs);

/// a^m by repeated multiplication; a^0 is the identity.
Matrix matrix_power(const Matrix& a, unsigned m);

}  // namespace specmat
