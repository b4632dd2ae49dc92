#include "specmat/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

namespace {

double spectral_scale(std::span<const Complex> values) {
  double scale = 1.0;
  for (const Complex z : values) scale = std::max(scale, std::abs(z));
  return scale;
}

void require_distinct(std::span<const Complex> values, double tol, const char* who) {
  const double link = tol * spectral_scale(values);
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (std::abs(values[i] - values[j]) <= link) {
        throw CoincidentEigenvaluesError(std::string(who) + ": eigenvalues " + std::to_string(i) +
                                         " and " + std::to_string(j) +
                                         " coincide within tolerance; use hermite_coefficients");
      }
    }
  }
}

// 1 / prod_{j != k} (alpha_j - alpha_k), without the sign prefactor.
Complex inverse_gap_product(std::span<const Complex> alpha, std::size_t k) {
  Complex prod = 1.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j != k) prod *= alpha[j] - alpha[k];
  }
  return 1.0 / prod;
}

double sign_prefactor(std::size_t n) { return (n + 1) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

CoefficientVector lagrange_coefficients(const CharacteristicPolynomial& p, const Spectrum& s,
                                        const ScalarFunction& fn, double tol) {
  const std::size_t n = p.degree();
  if (s.size() != n) {
    throw DimensionError("lagrange_coefficients: spectrum has " + std::to_string(s.size()) +
                         " values for a degree-" + std::to_string(n) + " polynomial");
  }
  require_distinct(s.values, tol, "lagrange_coefficients");

  std::vector<Complex> f(n);
  const double sign = sign_prefactor(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex alpha = s.values[k];
    const DeflatedCoefficients d = deflate(p, alpha);
    const Complex weight = sign * fn.value(alpha) * inverse_gap_product(s.values, k);
    // f_l picks up (p_{n-l-1})_k = q[n-1-l].
    for (std::size_t l = 0; l < n; ++l) f[l] += d.q[n - 1 - l] * weight;
  }
  return CoefficientVector(std::move(f));
}

std::vector<Complex> DividedDifferenceTable::newton_coefficients() const {
  std::vector<Complex> c(size());
  for (std::size_t j = 0; j < size(); ++j) c[j] = entry(0, j);
  return c;
}

DividedDifferenceTable divided_difference_table(std::span<const Complex> nodes,
                                                const ScalarFunction& fn) {
  const std::size_t n = nodes.size();
  if (n == 0) throw DimensionError("divided_difference_table: no nodes");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(nodes[i])) throw NonFiniteError("divided_difference_table: non-finite node");
    for (std::size_t j = i + 2; j < n; ++j) {
      if (nodes[j] == nodes[i] && nodes[j - 1] != nodes[i]) {
        throw DomainError("divided_difference_table: equal nodes must be adjacent");
      }
    }
  }
  if (!fn.supports_derivatives()) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (nodes[i] == nodes[i + 1]) {
        throw UnsupportedFunctionError(
            "divided_difference_table: repeated nodes need derivatives, which a tabulated "
            "function cannot supply");
      }
    }
  }

  std::vector<std::vector<Complex>> rows(n);
  rows[0].resize(n);
  for (std::size_t i = 0; i < n; ++i) rows[0][i] = fn.value(nodes[i]);
  double factorial = 1.0;
  for (std::size_t order = 1; order < n; ++order) {
    factorial *= static_cast<double>(order);
    rows[order].resize(n - order);
    for (std::size_t i = 0; i + order < n; ++i) {
      const Complex lo = nodes[i];
      const Complex hi = nodes[i + order];
      if (lo == hi) {
        // Adjacency makes every node in between equal too.
        rows[order][i] = fn.derivative(lo, static_cast<unsigned>(order)) / factorial;
      } else {
        rows[order][i] = (rows[order - 1][i + 1] - rows[order - 1][i]) / (hi - lo);
      }
    }
  }
  return DividedDifferenceTable(std::vector<Complex>(nodes.begin(), nodes.end()), std::move(rows));
}

CoefficientVector hermite_coefficients(const ClusteredSpectrum& cs, const ScalarFunction& fn) {
  const std::vector<Complex> nodes = cs.expanded();
  const std::size_t n = nodes.size();
  if (n == 0) throw DimensionError("hermite_coefficients: empty spectrum");
  if (cs.max_multiplicity() > 1 && !fn.supports_derivatives()) {
    throw UnsupportedFunctionError("hermite_coefficients: repeated eigenvalue needs derivatives of " +
                                   fn.name());
  }
  const std::vector<Complex> newton = divided_difference_table(nodes, fn).newton_coefficients();

  // Nested form c_0 + (z - x_0)(c_1 + (z - x_1)(c_2 + ...)), unrolled from the
  // inside; poly holds monomial coefficients, lowest degree first.
  std::vector<Complex> poly{newton[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] = poly[k - 1] - nodes[j] * poly[k];
    poly[0] = -nodes[j] * poly[0] + newton[j];
  }
  return CoefficientVector(std::move(poly));
}

Complex evaluate_interpolant(const CoefficientVector& f, Complex z, unsigned order) {
  Complex acc = 0.0;
  for (std::size_t l = f.size(); l-- > order;) {
    double falling = 1.0;
    for (unsigned k = 0; k < order; ++k) falling *= static_cast<double>(l - k);
    acc = acc * z + falling * f[l];
  }
  return acc;
}

std::string to_string(SynthesisPath path) {
  return path == SynthesisPath::lagrange ? "lagrange" : "hermite";
}

MatrixFunctionResult evaluate_matrix_function(const Matrix& a, const ScalarFunction& fn, double t,
                                              const EvaluationOptions& options) {
  if (!std::isfinite(t)) throw NonFiniteError("evaluate_matrix_function: non-finite t");
  if (!(options.cluster_tol >= 0.0)) {
    throw DomainError("evaluate_matrix_function: cluster tolerance must be nonnegative");
  }
  CharacteristicPolynomial p = char_poly(a);
  const bool closed = p.degree() <= 4;
  Spectrum spectrum = closed ? solve_closed(p) : solve_general(p);
  ClusteredSpectrum clustered = cluster(spectrum, options.cluster_tol);
  const ScalarFunction scaled = fn.time_scaled(t);

  SynthesisPath path;
  CoefficientVector coeffs;
  if (clustered.all_simple()) {
    path = SynthesisPath::lagrange;
    coeffs = lagrange_coefficients(p, spectrum, scaled, options.cluster_tol);
  } else {
    path = SynthesisPath::hermite;
    coeffs = hermite_coefficients(clustered, scaled);
  }
  Matrix value = horner_matrix_poly(a, coeffs);

  double min_gap = 0.0;
  if (clustered.nodes.size() > 1) {
    min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < clustered.nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < clustered.nodes.size(); ++j) {
        min_gap = std::min(min_gap, std::abs(clustered.nodes[i].value - clustered.nodes[j].value));
      }
    }
  }
  const double residual_max = spectrum.max_residual();
  const bool warning = p.precision_warning();
  Diagnostics diag{std::move(p),      std::move(spectrum), std::move(clustered),
                   path,              closed ? "closed" : "aberth",
                   residual_max,      min_gap,             warning};
  return MatrixFunctionResult{std::move(value), std::move(coeffs), std::move(diag)};
}

SynthesisTrace build_trace(const CharacteristicPolynomial& p, const Spectrum& s, double tol) {
  const std::size_t n = p.degree();
  if (s.size() != n) throw DimensionError("build_trace: spectrum size does not match degree");
  require_distinct(s.values, tol, "build_trace");
  const auto& alpha = s.values;

  std::vector<Complex> vandermonde(n * n);
  std::vector<Complex> hankel(n * n);
  std::vector<Complex> modal(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex power = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      vandermonde[i * n + k] = power;
      power *= alpha[k];
    }
    const DeflatedCoefficients d = deflate(p, alpha[k]);
    // Row i of U_L holds (p_{n-1-i})_k.
    for (std::size_t i = 0; i < n; ++i) modal[i * n + k] = d.q[n - 1 - i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) hankel[i * n + j] = p.coefficient(n - 1 - i - j);
  }

  SynthesisTrace trace{companion(p),
                       std::vector<Complex>(n),
                       std::vector<Complex>(n),
                       Matrix(n, std::move(vandermonde)),
                       Matrix(n, std::move(hankel)),
                       Matrix(n, std::move(modal)),
                       Matrix::diagonal(alpha),
                       std::vector<Complex>(n),
                       0.0,
                       0.0};
  trace.basis_first[0] = 1.0;
  trace.basis_last[n - 1] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    trace.cofactor[k] = sign_prefactor(n) * inverse_gap_product(alpha, k);
  }

  // Eigenvector entries written out as explicit power sums
  // p_{n-1-i} + p_{n-2-i} alpha + ... + alpha^{n-1-i}.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex sum = 0.0;
      Complex power = 1.0;
      for (std::size_t m = 0; m + i < n; ++m) {
        sum += p.coefficient(n - 1 - i - m) * power;
        power *= alpha[k];
      }
      trace.eigenvector_residual =
          std::max(trace.eigenvector_residual, std::abs(trace.modal(i, k) - sum));
    }
  }

  const CoefficientVector f = lagrange_coefficients(p, s, ScalarFunction::exp(), tol);
  for (std::size_t l = 0; l < n; ++l) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += trace.modal(l, k) * trace.cofactor[k] * std::exp(alpha[k]);
    trace.synthesis_residual = std::max(trace.synthesis_residual, std::abs(sum - f[l]));
  }
  return trace;
}

}  // namespace specmat
