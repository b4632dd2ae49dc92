#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "specmat/charpoly.hpp"
#include "specmat/complex_matrix.hpp"
#include "specmat/roots.hpp"
#include "specmat/scalar_function.hpp"

namespace specmat {

/// Coefficients of the degree-(n-1) interpolant of F at n distinct
/// eigenvalues, by the closed formula
///
///   f_l = (-1)^{n+1} sum_k (p_{n-l-1})_k F(alpha_k) / prod_{j != k} (alpha_j - alpha_k)
///
/// with (p_j)_k taken from deflate(p, alpha_k) and (p_0)_k = 1. Throws
/// CoincidentEigenvaluesError if two eigenvalues lie within
/// `tol * max(1, max |alpha|)` of each other.
CoefficientVector lagrange_coefficients(const CharacteristicPolynomial& p, const Spectrum& s,
                                        const ScalarFunction& fn,
                                        double tol = kDefaultClusterTolerance);

/// Upper-triangular table of Newton divided differences F[x_i, ..., x_j].
class DividedDifferenceTable {
 public:
  DividedDifferenceTable(std::vector<Complex> nodes, std::vector<std::vector<Complex>> rows)
      : nodes_(std::move(nodes)), rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Complex> nodes() const noexcept { return nodes_; }
  /// F[x_i, ..., x_j] for i <= j.
  Complex entry(std::size_t i, std::size_t j) const noexcept { return rows_[j - i][i]; }
  /// F[x_0], F[x_0,x_1], ..., F[x_0..x_{n-1}]: the Newton-form coefficients.
  std::vector<Complex> newton_coefficients() const;

 private:
  std::vector<Complex> nodes_;
  // rows_[order][i] = F[x_i, ..., x_{i+order}]
  std::vector<std::vector<Complex>> rows_;
};

/// Confluent divided differences: a run of r+1 equal nodes gives
/// F^{(r)}(x) / r!. Equal nodes must be adjacent.
DividedDifferenceTable divided_difference_table(std::span<const Complex> nodes,
                                                const ScalarFunction& fn);

/// Hermite interpolation over the clustered spectrum (F and its first m-1
/// derivatives at a node of multiplicity m), expanded from Newton form into
/// monomial coefficients. Agrees with lagrange_coefficients on simple spectra.
CoefficientVector hermite_coefficients(const ClusteredSpectrum& cs, const ScalarFunction& fn);

/// r-th derivative of sum_l f_l z^l at z.
Complex evaluate_interpolant(const CoefficientVector& f, Complex z, unsigned order = 0);

enum class SynthesisPath { lagrange, hermite };
std::string to_string(SynthesisPath path);

struct EvaluationOptions {
  double cluster_tol = kDefaultClusterTolerance;
};

struct Diagnostics {
  CharacteristicPolynomial polynomial;
  Spectrum spectrum;
  ClusteredSpectrum clustered;
  SynthesisPath path = SynthesisPath::lagrange;
  /// "closed" (radicals) or "aberth"
  std::string root_solver;
  double residual_max = 0.0;
  /// Smallest distance between distinct clustered nodes; 0 for a single node.
  double min_gap = 0.0;
  bool precision_warning = false;
};

struct MatrixFunctionResult {
  Matrix value;
  CoefficientVector coefficients;
  Diagnostics diagnostics;
};

/// F(tA) = sum_l f_l A^l. The eigenvalues of A are found once; the time
/// parameter enters through the interpolated function lambda -> F(t lambda).
/// Clusters of eigenvalues switch the pipeline to the Hermite path.
MatrixFunctionResult evaluate_matrix_function(const Matrix& a, const ScalarFunction& fn,
                                              double t = 1.0, const EvaluationOptions& options = {});

/// Every intermediate object of the diagonalisation of the companion matrix.
/// Verification only; the evaluation path never builds these.
struct SynthesisTrace {
  Matrix companion;        // L
  std::vector<Complex> basis_first;  // e_1
  std::vector<Complex> basis_last;   // e_n
  Matrix vandermonde;      // Q_L, row i = alpha_k^i
  Matrix hankel;           // P_L, (i, j) -> p_{n-1-i-j}, p_0 = 1
  Matrix modal;            // U_L, column k = quotient of p by (lambda - alpha_k)
  Matrix diagonal;         // D_A
  /// (-1)^{n+1} / prod_{j != k}(alpha_j - alpha_k), the closed form of
  /// U_L^{-1} e_1 = Q_L^{-1} e_n.
  std::vector<Complex> cofactor;
  /// max |U_L(i,k) - sum_m p_{n-1-i-m} alpha_k^m| over all entries
  double eigenvector_residual = 0.0;
  /// max |U_L (cofactor .* e^alpha) - lagrange_coefficients(exp)|
  double synthesis_residual = 0.0;
};

SynthesisTrace build_trace(const CharacteristicPolynomial& p, const Spectrum& s,
                           double tol = kDefaultClusterTolerance);

}  // namespace specmat
