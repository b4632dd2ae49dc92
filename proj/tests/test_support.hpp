#pragma once

// Independent reference routines for the unit and acceptance suites. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "specmat/complex_matrix.hpp"

namespace specmat::testing {

inline Matrix random_complex_matrix(std::size_t n, std::mt19937_64& rng, double half_width = 1.0) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<Complex> e(n * n);
  for (auto& z : e) {
    const double re = u(rng);
    z = Complex(re, u(rng));
  }
  return Matrix(n, std::move(e));
}

inline Matrix random_integer_matrix(std::size_t n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> u(lo, hi);
  std::vector<Complex> e(n * n);
  for (auto& z : e) z = static_cast<double>(u(rng));
  return Matrix(n, std::move(e));
}

/// Textbook triple loop, j innermost over the dot product.
inline Matrix naive_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      e[i * n + j] = s;
    }
  return Matrix(n, std::move(e));
}

inline Matrix naive_power(const Matrix& a, unsigned m) {
  Matrix acc = Matrix::identity(a.size());
  for (unsigned k = 0; k < m; ++k) acc = naive_product(acc, a);
  return acc;
}

/// Leibniz expansion over all permutations; fine up to n = 6 or so.
inline Complex leibniz_determinant(const std::vector<std::vector<Complex>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex det = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// det(x E - A) by the Leibniz formula.
inline Complex char_value(const Matrix& a, Complex x) {
  const std::size_t n = a.size();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? x : Complex{}) - a(i, j);
  return leibniz_determinant(m);
}

/// Product of polynomials, lowest degree first.
inline std::vector<Complex> poly_multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Coefficients (lowest first) of the degree-n polynomial through
/// (x_i, y_i), by solving the Vandermonde system with Gaussian elimination.
inline std::vector<Complex> interpolate_by_solve(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  const std::size_t m = x.size();
  std::vector<std::vector<Complex>> aug(m, std::vector<Complex>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Complex p = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      aug[i][j] = p;
      p *= x[i];
    }
    aug[i][m] = y[i];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r)
      if (std::abs(aug[r][c]) > std::abs(aug[piv][c])) piv = r;
    std::swap(aug[c], aug[piv]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c) continue;
      const Complex f = aug[r][c] / aug[c][c];
      for (std::size_t k = c; k <= m; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Complex> coeffs(m);
  for (std::size_t i = 0; i < m; ++i) coeffs[i] = aug[i][m] / aug[i][i];
  return coeffs;
}

/// Gauss-Jordan inverse with partial pivoting.
inline Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Complex>> aug(n, std::vector<Complex>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1.0;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(aug[r][c]) > std::abs(aug[piv][c])) piv = r;
    std::swap(aug[c], aug[piv]);
    const Complex d = aug[c][c];
    for (auto& z : aug[c]) z /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Complex f = aug[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = aug[i][n + j];
  return Matrix(n, std::move(e));
}

/// Plain recursive divided difference on distinct nodes.
inline Complex recursive_divided_difference(const std::function<Complex(Complex)>& f,
                                            const std::vector<Complex>& x, std::size_t i, std::size_t j) {
  if (i == j) return f(x[i]);
  return (recursive_divided_difference(f, x, i + 1, j) - recursive_divided_difference(f, x, i, j - 1)) /
         (x[j] - x[i]);
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? m : INFINITY;
}

/// Relative Frobenius distance, reference second.
inline double rel_error(const Matrix& a, const Matrix& ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    num += std::norm(a.entries()[k] - ref.entries()[k]);
    den += std::norm(ref.entries()[k]);
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

/// Distinct random points in the box [-r, r]^2 with pairwise gap >= sep.
inline std::vector<Complex> separated_points(std::size_t n, std::mt19937_64& rng, double r, double sep) {
  std::uniform_real_distribution<double> u(-r, r);
  std::vector<Complex> pts;
  while (pts.size() < n) {
    const double re = u(rng);
    const Complex z(re, u(rng));
    if (std::all_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) >= sep; })) pts.push_back(z);
  }
  return pts;
}

/// Minimum over permutations of the max distance between matched elements.
inline double multiset_distance(std::vector<Complex> a, const std::vector<Complex>& b) {
  auto key = [](Complex z) { return std::make_pair(z.real(), z.imag()); };
  std::sort(a.begin(), a.end(), [&](Complex x, Complex y) { return key(x) < key(y); });
  double best = INFINITY;
  do {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    best = std::min(best, m);
  } while (std::next_permutation(a.begin(), a.end(), [&](Complex x, Complex y) { return key(x) < key(y); }));
  return best;
}

}  // namespace specmat::testing
