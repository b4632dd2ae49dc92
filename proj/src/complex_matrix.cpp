#include "specmat/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "specmat/error.hpp"

namespace specmat {

namespace {

void require_same_size(const Matrix& a, const Matrix& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Matrix::Matrix(std::size_t n, std::vector<Complex> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw DimensionError("Matrix: dimension must be positive");
  if (entries_.size() != n_ * n_) {
    throw DimensionError("Matrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!is_finite(entries_[k])) {
      throw NonFiniteError("Matrix: non-finite entry at (" + std::to_string(k / n_) + ", " +
                           std::to_string(k % n_) + ")");
    }
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("Matrix::from_rows: ragged or non-square rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(n, std::move(entries));
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return Matrix(n, std::move(entries));
}

Matrix Matrix::zero(std::size_t n) { return Matrix(n, std::vector<Complex>(n * n)); }

Matrix Matrix::diagonal(std::span<const Complex> values) {
  const std::size_t n = values.size();
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = values[i];
  return Matrix(n, std::move(entries));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "mat_mul");
  const std::size_t n = a.size();
  const auto x = a.entries();
  const auto y = b.entries();
  std::vector<Complex> out(n * n);
  // i-k-j order keeps the inner loop contiguous in both y and out.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xik = x[i * n + k];
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * y[k * n + j];
    }
  }
  return Matrix(n, std::move(out));
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "add");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  const auto y = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += y[k];
  return Matrix(a.size(), std::move(out));
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_size(a, b, "subtract");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  const auto y = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= y[k];
  return Matrix(a.size(), std::move(out));
}

Matrix scale(const Matrix& a, Complex factor) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (auto& z : out) z *= factor;
  return Matrix(a.size(), std::move(out));
}

Matrix add_identity(const Matrix& a, Complex shift) {
  const std::size_t n = a.size();
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] += shift;
  return Matrix(n, std::move(out));
}

Complex trace(const Matrix& a) noexcept {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a(i, i);
  return sum;
}

Complex determinant(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Complex> lu(a.entries().begin(), a.entries().end());
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu[r * n + col]) > std::abs(lu[pivot * n + col])) pivot = r;
    }
    if (lu[pivot * n + col] == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[col * n + j], lu[pivot * n + j]);
      det = -det;
    }
    const Complex diag = lu[col * n + col];
    det *= diag;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu[r * n + col] / diag;
      for (std::size_t j = col + 1; j < n; ++j) lu[r * n + j] -= factor * lu[col * n + j];
    }
  }
  return det;
}

double frobenius_norm(const Matrix& a) noexcept {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double relative_frobenius_error(const Matrix& a, const Matrix& b) {
  const double denom = std::max(frobenius_norm(b), std::numeric_limits<double>::min());
  return frobenius_norm(subtract(a, b)) / denom;
}

Matrix matrix_polynomial(const Matrix& a, std::span<const Complex> coeffs) {
  const std::size_t n = a.size();
  if (coeffs.empty()) return Matrix::zero(n);
  Matrix acc = scale(Matrix::identity(n), coeffs.back());
  for (std::size_t l = coeffs.size() - 1; l-- > 0;) {
    acc = add_identity(mat_mul(acc, a), coeffs[l]);
  }
  return acc;
}

Matrix horner_matrix_poly(const Matrix& a, const CoefficientVector& coeffs) {
  if (coeffs.size() != a.size()) {
    throw DimensionError("horner_matrix_poly: expected " + std::to_string(a.size()) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  }
  return matrix_polynomial(a, coeffs.values());
}

Matrix matrix_power(const Matrix& a, unsigned m) {
  if (m == 0) return Matrix::identity(a.size());
  Matrix acc = a;
  for (unsigned k = 1; k < m; ++k) acc = mat_mul(acc, a);
  return acc;
}

}  // namespace specmat
