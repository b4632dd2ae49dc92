// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "specmat/charpoly.hpp"
#include "specmat/jobs.hpp"
#include "specmat/oracle.hpp"
#include "specmat/synthesis.hpp"
#include "test_support.hpp"

namespace {

using namespace specmat;
using specmat::testing::rel_error;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

Spectrum spectrum_of(std::vector<Complex> v) { return Spectrum{std::move(v), {}}; }

// 1. Two-eigenvalue formulas, distinct and confluent.
Outcome two_by_two_closed_forms() {
  const double a = 0.3, b = -1.1;
  const std::vector<Complex> roots{a, b};
  const auto f = lagrange_coefficients(CharacteristicPolynomial::from_roots(roots), spectrum_of(roots),
                                       ScalarFunction::exp());
  double err = std::max(rel(f[0], (b * std::exp(a) - a * std::exp(b)) / (b - a)),
                        rel(f[1], (std::exp(b) - std::exp(a)) / (b - a)));
  const double c = 0.7;
  const auto h = hermite_coefficients(ClusteredSpectrum{{{c, 2}}}, ScalarFunction::exp());
  err = std::max({err, rel(h[0], (1.0 - c) * std::exp(c)), rel(h[1], std::exp(c))});
  return {err <= 1e-12, fmt("max rel err %.2e (tol %.0e)", err, 1e-12)};
}

// 2. Three-eigenvalue displayed sums.
Outcome three_by_three_closed_forms() {
  const double a1 = 0.3, a2 = -1.1, a3 = 2.0;
  const double d1 = (a2 - a1) * (a3 - a1), d2 = (a1 - a2) * (a3 - a2), d3 = (a1 - a3) * (a2 - a3);
  const double e1 = std::exp(a1), e2 = std::exp(a2), e3 = std::exp(a3);
  const double want[3] = {a2 * a3 * e1 / d1 + a1 * a3 * e2 / d2 + a1 * a2 * e3 / d3,
                          -(a2 + a3) * e1 / d1 - (a1 + a3) * e2 / d2 - (a1 + a2) * e3 / d3,
                          e1 / d1 + e2 / d2 + e3 / d3};
  const std::vector<Complex> roots{a1, a2, a3};
  const auto f = lagrange_coefficients(CharacteristicPolynomial::from_roots(roots), spectrum_of(roots),
                                       ScalarFunction::exp());
  double err = 0.0;
  for (int l = 0; l < 3; ++l) err = std::max(err, rel(f[l], want[l]));
  return {err <= 1e-11, fmt("max rel err %.2e (tol %.0e)", err, 1e-11)};
}

// 3. A^m = sum_l (L^m e_1)_l A^l.
Outcome power_reduction() {
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = dim(rng);
    const Matrix a = specmat::testing::random_integer_matrix(n, rng);
    const auto p = char_poly(a);
    for (unsigned m = 0; m <= 2 * n + 2; ++m) {
      const auto c = power_column(p, m);
      Matrix sum = Matrix::zero(n);
      for (std::size_t l = 0; l < n; ++l)
        sum = add(sum, scale(specmat::testing::naive_power(a, static_cast<unsigned>(l)), c[l]));
      const Matrix direct = specmat::testing::naive_power(a, m);
      worst = std::max(worst, frobenius_norm(subtract(sum, direct)) / std::max(1.0, frobenius_norm(direct)));
    }
  }
  return {worst <= 1e-9, fmt("50 matrices, worst rel err %.2e (tol %.0e)", worst, 1e-9)};
}

// 4. Spectral e^A against scaling and squaring.
Outcome oracle_equivalence() {
  double worst = 0.0;
  int count = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t trial = 0; trial < 40; ++trial, ++count) {
      const Matrix a = benchmark_matrix(4004, n, trial, 1e-2, 5.0);
      const Matrix spectral = evaluate_matrix_function(a, ScalarFunction::exp()).value;
      worst = std::max(worst, rel_error(spectral, oracle_expm(a)));
    }
  }
  return {worst <= 1e-8, fmt("%.0f matrices, worst rel err %.2e (tol 1e-08)", count, worst)};
}

// 5. Distinct path at {a, a+h} vs confluent path at {a: 2}.
Outcome confluent_continuity() {
  const double a = 0.4;
  const auto confluent = hermite_coefficients(ClusteredSpectrum{{{a, 2}}}, ScalarFunction::exp());
  double worst_ratio = 0.0;
  for (const double h : {1e-4, 1e-5, 1e-6}) {
    const std::vector<Complex> roots{a, a + h};
    const auto distinct = lagrange_coefficients(CharacteristicPolynomial::from_roots(roots), spectrum_of(roots),
                                                ScalarFunction::exp());
    const double diff = specmat::testing::max_abs_diff(distinct.values(), confluent.values());
    worst_ratio = std::max(worst_ratio, diff / h);
  }
  return {worst_ratio <= 10.0, fmt("worst diff/h %.3f (limit %.0f)", worst_ratio, 10.0)};
}

// 6. e^{tA} across t, and d/dt e^{tA} = A e^{tA} by finite differences.
Outcome time_parameter() {
  double worst = 0.0, worst_fd = 0.0;
  const double h = 1e-5, t0 = 0.3;
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const Matrix a = benchmark_matrix(6006, 3, trial, 1e-2, 5.0);
    for (const double t : {0.1, 0.5, 2.0}) {
      const Matrix spectral = evaluate_matrix_function(a, ScalarFunction::exp(), t).value;
      worst = std::max(worst, rel_error(spectral, oracle_expm(scale(a, t))));
    }
    const Matrix e_t = evaluate_matrix_function(a, ScalarFunction::exp(), t0).value;
    const Matrix e_th = evaluate_matrix_function(a, ScalarFunction::exp(), t0 + h).value;
    worst_fd = std::max(worst_fd, rel_error(scale(subtract(e_th, e_t), 1.0 / h), mat_mul(a, e_t)));
  }
  const bool pass = worst <= 1e-8 && worst_fd <= 1e-4;
  return {pass, fmt("worst rel err %.2e (tol 1e-08), derivative rel err %.2e (tol 1e-04)", worst, worst_fd)};
}

// 7. sin^2 + cos^2 = I through the pipeline; polynomials reproduce themselves.
Outcome entire_functions() {
  std::mt19937_64 rng(7007);
  double worst_trig = 0.0, worst_poly = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      // Odd cases force a double eigenvalue with a Jordan block: A = S J S^{-1}.
      const bool forced = rep % 2 == 1;
      auto d = specmat::testing::separated_points(n, rng, 1.0, 0.1);
      if (forced) d[1] = d[0];
      std::vector<Complex> j(n * n);
      for (std::size_t k = 0; k < n; ++k) j[k * n + k] = d[k];
      if (forced) j[1] = 1.0;
      Matrix s = add_identity(specmat::testing::random_complex_matrix(n, rng), 2.0);
      const Matrix a = mat_mul(mat_mul(s, Matrix(n, j)), specmat::testing::inverse(s));
      ClusteredSpectrum cs;
      if (forced) {
        cs.nodes.push_back({d[0], 2});
        for (std::size_t k = 2; k < n; ++k) cs.nodes.push_back({d[k], 1});
      }

      Matrix sa = Matrix::zero(n), ca = Matrix::zero(n);
      if (forced) {
        sa = horner_matrix_poly(a, hermite_coefficients(cs, ScalarFunction::sin()));
        ca = horner_matrix_poly(a, hermite_coefficients(cs, ScalarFunction::cos()));
      } else {
        sa = evaluate_matrix_function(a, ScalarFunction::sin()).value;
        ca = evaluate_matrix_function(a, ScalarFunction::cos()).value;
      }
      worst_trig = std::max(
          worst_trig, frobenius_norm(subtract(add(mat_mul(sa, sa), mat_mul(ca, ca)), Matrix::identity(n))));

      // Polynomial reproduction on the same spectrum.
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      std::uniform_int_distribution<std::size_t> deg(0, n - 1);
      std::vector<Complex> c(deg(rng) + 1);
      for (auto& z : c) z = Complex(u(rng), u(rng));
      const auto fn = ScalarFunction::polynomial(c);
      CoefficientVector f;
      if (forced) {
        f = hermite_coefficients(cs, fn);
      } else {
        f = lagrange_coefficients(CharacteristicPolynomial::from_roots(d), spectrum_of(d), fn);
      }
      c.resize(n);
      worst_poly = std::max(worst_poly, specmat::testing::max_abs_diff(f.values(), c));
    }
  }
  const bool pass = worst_trig <= 1e-9 && worst_poly <= 1e-12;
  return {pass, fmt("sin^2+cos^2-I %.2e (tol 1e-09), polynomial coeff err %.2e (tol 1e-12)", worst_trig, worst_poly)};
}

// 8. U_L = P_L Q_L and U_L^{-1} e_1 = Q_L^{-1} e_n = cofactor vector.
Outcome trace_structure() {
  std::mt19937_64 rng(8008);
  double worst = 0.0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto roots = specmat::testing::separated_points(n, rng, 1.5, 0.1);
      const auto tr = build_trace(CharacteristicPolynomial::from_roots(roots), spectrum_of(roots));
      worst = std::max(worst, frobenius_norm(subtract(tr.modal, mat_mul(tr.hankel, tr.vandermonde))) /
                                  frobenius_norm(tr.modal));
      const Matrix u_inv = specmat::testing::inverse(tr.modal);
      const Matrix q_inv = specmat::testing::inverse(tr.vandermonde);
      double scale_c = 0.0;
      for (const Complex z : tr.cofactor) scale_c = std::max(scale_c, std::abs(z));
      for (std::size_t k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(u_inv(k, 0) - tr.cofactor[k]) / scale_c);
        worst = std::max(worst, std::abs(q_inv(k, n - 1) - tr.cofactor[k]) / scale_c);
      }
    }
  }
  return {worst <= 1e-9, fmt("worst rel err %.2e (tol %.0e)", worst, 1e-9)};
}

// 9. Bench output reproducible byte for byte.
Outcome bench_determinism() {
  JobRequest req;
  req.size_lo = 2;
  req.size_hi = 6;
  req.trials = 5;
  req.seed = 42;
  const auto first = run_bench(req);
  const auto second = run_bench(req);
  const bool pass = first.exit_code == 0 && first.output == second.output;
  return {pass, fmt("%.0f bytes, identical=%.0f", static_cast<double>(first.output.size()),
                    first.output == second.output ? 1.0 : 0.0)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 two-eigenvalue closed forms", two_by_two_closed_forms},
      {"AC2 three-eigenvalue closed forms", three_by_three_closed_forms},
      {"AC3 power reduction lemma", power_reduction},
      {"AC4 oracle equivalence", oracle_equivalence},
      {"AC5 confluent continuity", confluent_continuity},
      {"AC6 time parameter", time_parameter},
      {"AC7 entire functions", entire_functions},
      {"AC8 companion diagonalisation structure", trace_structure},
      {"AC9 bench determinism", bench_determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %-42s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
