#include "specmat/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "specmat/charpoly.hpp"
#include "specmat/error.hpp"
#include "specmat/matrix_io.hpp"
#include "specmat/oracle.hpp"
#include "specmat/roots.hpp"
#include "specmat/synthesis.hpp"

namespace specmat {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse " + what + " '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(x)) throw DomainError("cannot parse " + what + " '" + s + "'");
  return x;
}

std::string describe_roots(const std::vector<Complex>& values, const std::vector<double>& residuals) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << "\n  root " << k << ": " << values[k].real() << (values[k].imag() < 0 ? " - " : " + ")
        << std::abs(values[k].imag()) << "i, residual " << residuals[k];
  }
  return out.str();
}

std::string csv_safe(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ';');
  return s;
}

struct Check {
  std::string name;
  double value;
  double limit;
};

std::string format_check(const Check& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %-28s %.3e (limit %.1e)", c.value <= c.limit ? "PASS" : "FAIL",
                c.name.c_str(), c.value, c.limit);
  return buf;
}

}  // namespace

ScalarFunction parse_function(const std::string& spec) {
  if (spec == "exp") return ScalarFunction::exp();
  if (spec == "sin") return ScalarFunction::sin();
  if (spec == "cos") return ScalarFunction::cos();
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<Complex> coeffs;
    std::stringstream list(spec.substr(5));
    std::string item;
    while (std::getline(list, item, ',')) coeffs.emplace_back(parse_double(item, "polynomial coefficient"));
    if (coeffs.empty()) throw DomainError("poly: needs at least one coefficient");
    return ScalarFunction::polynomial(std::move(coeffs));
  }
  throw DomainError("unknown function '" + spec + "' (expected exp, sin, cos or poly:c0,c1,...)");
}

Method parse_method(const std::string& s) {
  if (s == "spectral") return Method::spectral;
  if (s == "oracle") return Method::oracle;
  if (s == "both") return Method::both;
  throw DomainError("unknown method '" + s + "' (expected spectral, oracle or both)");
}

OutputKind parse_output(const std::string& s) {
  if (s == "coeffs") return OutputKind::coeffs;
  if (s == "matrix") return OutputKind::matrix;
  if (s == "both") return OutputKind::both;
  throw DomainError("unknown output '" + s + "' (expected coeffs, matrix or both)");
}

std::pair<std::size_t, std::size_t> parse_size_range(const std::string& s) {
  auto parse_size = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw DomainError("cannot parse size range '" + s + "'");
    }
    if (used != part.size() || v < 1) throw DomainError("cannot parse size range '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_size(s);
    return {n, n};
  }
  const std::size_t lo = parse_size(s.substr(0, dots));
  const std::size_t hi = parse_size(s.substr(dots + 2));
  if (lo > hi) throw DomainError("size range '" + s + "' is empty");
  return {lo, hi};
}

double default_cluster_tol() {
  const char* env = std::getenv("SPECMAT_CLUSTER_TOL");
  if (env == nullptr || *env == '\0') return kDefaultClusterTolerance;
  const double tol = parse_double(env, "SPECMAT_CLUSTER_TOL");
  if (tol < 0.0) throw DomainError("SPECMAT_CLUSTER_TOL must be nonnegative");
  return tol;
}

JobOutcome run_eval(const JobRequest& req) {
  JobOutcome outcome;
  Matrix a = Matrix::identity(1);
  ScalarFunction fn = ScalarFunction::exp();
  try {
    if (req.method == Method::oracle && req.output != OutputKind::matrix) {
      throw DomainError("method oracle produces no coefficients; use --output matrix");
    }
    fn = parse_function(req.function);
    if (!std::isfinite(req.t)) throw DomainError("t must be finite");
    if (!(req.cluster_tol >= 0.0)) throw DomainError("cluster tolerance must be nonnegative");
    a = read_matrix_file(req.input_path);
  } catch (const Error& e) {
    return {exit_code::usage, "", e.what()};
  }

  try {
    ResultDocument doc;
    doc.n = a.size();
    const bool want_matrix = req.output != OutputKind::coeffs;
    const bool want_coeffs = req.output != OutputKind::matrix;
    std::optional<Matrix> reference;
    if (req.method != Method::spectral) reference = oracle_matfun(a, fn.time_scaled(req.t));

    if (req.method == Method::oracle) {
      doc.matrix = *reference;
    } else {
      MatrixFunctionResult result =
          evaluate_matrix_function(a, fn, req.t, EvaluationOptions{req.cluster_tol});
      if (want_matrix) doc.matrix = result.value;
      if (want_coeffs) doc.coefficients = result.coefficients;
      doc.eigenvalues = result.diagnostics.clustered;
      doc.path = result.diagnostics.path;
      doc.residual_max = result.diagnostics.residual_max;
      if (reference) doc.disagreement = relative_frobenius_error(result.value, *reference);
      if (result.diagnostics.precision_warning) {
        outcome.message = "warning: characteristic polynomial of a " + std::to_string(a.size()) +
                          "x" + std::to_string(a.size()) + " matrix may be inaccurate";
      }
    }
    outcome.output = write_result_document(doc);
  } catch (const ConvergenceError& e) {
    return {exit_code::numerical, "", std::string(e.what()) + describe_roots(e.best_iterate(), e.residuals())};
  } catch (const Error& e) {
    return {exit_code::numerical, "", e.what()};
  }
  return outcome;
}

JobOutcome run_verify(const JobRequest& req) {
  Matrix a = Matrix::identity(1);
  try {
    a = read_matrix_file(req.input_path);
  } catch (const Error& e) {
    return {exit_code::usage, "", e.what()};
  }

  std::vector<Check> checks;
  try {
    const std::size_t n = a.size();
    const double norm = frobenius_norm(a);
    const CharacteristicPolynomial p = char_poly(a);

    const Complex tr = trace(a);
    checks.push_back({"trace relation", std::abs(p.coefficient(1) + tr) / std::max(1.0, std::abs(tr)), 1e-10});
    const Complex det = determinant(a);
    const double det_scale = std::max({1.0, std::abs(det), std::pow(norm, static_cast<double>(n))});
    checks.push_back({"determinant relation",
                      std::abs(p.coefficient(n) - std::pow(-1.0, static_cast<double>(n)) * det) / det_scale,
                      1e-10});

    const CharacteristicPolynomial round_trip = char_poly(companion(p));
    double rt = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      rt = std::max(rt, std::abs(round_trip.coefficient(j) - p.coefficient(j)) / p.coefficient_scale());
    }
    checks.push_back({"companion round trip", rt, 1e-10});

    double lemma = 0.0;
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (std::size_t l = 1; l < n; ++l) powers.push_back(mat_mul(powers.back(), a));
    Matrix direct = Matrix::identity(n);
    for (std::size_t m = 0; m <= 2 * n + 2; ++m) {
      const auto c = power_column(p, m);
      Matrix sum = Matrix::zero(n);
      for (std::size_t l = 0; l < n; ++l) sum = add(sum, scale(powers[l], c[l]));
      lemma = std::max(lemma, frobenius_norm(subtract(sum, direct)) / std::max(1.0, frobenius_norm(direct)));
      direct = mat_mul(direct, a);
    }
    checks.push_back({"power reduction", lemma, 1e-9});

    const ScalarFunction fn = parse_function(req.function);
    const MatrixFunctionResult res =
        evaluate_matrix_function(a, fn, req.t, EvaluationOptions{req.cluster_tol});
    checks.push_back({"root residuals", res.diagnostics.residual_max / p.coefficient_scale(),
                      kRootResidualTolerance});

    double interp = 0.0;
    const ScalarFunction scaled = fn.time_scaled(req.t);
    for (const auto& node : res.diagnostics.clustered.nodes) {
      for (unsigned r = 0; r < node.multiplicity; ++r) {
        const Complex want = scaled.derivative(node.value, r);
        const Complex got = evaluate_interpolant(res.coefficients, node.value, r);
        interp = std::max(interp, std::abs(got - want) / std::max(1.0, std::abs(want)));
      }
    }
    checks.push_back({"interpolation property", interp, 1e-8});

    const Matrix reference = oracle_matfun(a, scaled);
    checks.push_back({"oracle agreement", relative_frobenius_error(res.value, reference), 1e-8});

    const Matrix forward = evaluate_matrix_function(a, ScalarFunction::exp(), req.t).value;
    const Matrix backward = evaluate_matrix_function(a, ScalarFunction::exp(), -req.t).value;
    checks.push_back({"group identity",
                      relative_frobenius_error(mat_mul(forward, backward), Matrix::identity(n)), 1e-9});

    const Complex det_exp = determinant(forward);
    const Complex exp_tr = std::exp(req.t * tr);
    checks.push_back({"determinant of exponential", std::abs(det_exp - exp_tr) / std::abs(exp_tr), 1e-8});
  } catch (const ConvergenceError& e) {
    return {exit_code::numerical, "", std::string(e.what()) + describe_roots(e.best_iterate(), e.residuals())};
  } catch (const Error& e) {
    return {exit_code::numerical, "", e.what()};
  }

  JobOutcome outcome;
  bool all = true;
  for (const auto& c : checks) {
    outcome.output += format_check(c) + "\n";
    all = all && c.value <= c.limit;
  }
  outcome.exit_code = all ? exit_code::ok : exit_code::check_failed;
  return outcome;
}

Matrix random_unit_square_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> entries(n * n);
  for (auto& z : entries) {
    const double re = unit(rng);
    z = Complex(re, unit(rng));
  }
  return Matrix(n, std::move(entries));
}

double min_eigenvalue_gap(const Matrix& a) {
  const Spectrum s = solve(char_poly(a));
  double gap = s.size() > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) gap = std::min(gap, std::abs(s.values[i] - s.values[j]));
  }
  return gap;
}

Matrix benchmark_matrix(std::uint64_t seed, std::size_t n, std::size_t trial, double min_gap,
                        std::optional<double> max_norm) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  for (;;) {
    Matrix a = random_unit_square_matrix(n, rng);
    if (max_norm && frobenius_norm(a) > *max_norm) continue;
    try {
      if (n == 1 || min_eigenvalue_gap(a) >= min_gap) return a;
    } catch (const ConvergenceError&) {
      // resample
    }
  }
}

JobOutcome run_bench(const JobRequest& req) {
  using clock = std::chrono::steady_clock;
  JobOutcome outcome;
  outcome.output = "n,trial,seed,method,err_rel,wall_ms,status\n";

  std::vector<Method> methods;
  if (req.method != Method::oracle) methods.push_back(Method::spectral);
  if (req.method != Method::spectral) methods.push_back(Method::oracle);

  ScalarFunction fn = ScalarFunction::exp();
  try {
    fn = parse_function(req.function);
  } catch (const Error& e) {
    return {exit_code::usage, "", e.what()};
  }

  for (std::size_t n = req.size_lo; n <= req.size_hi; ++n) {
    for (std::size_t trial = 0; trial < req.trials; ++trial) {
      const Matrix a = benchmark_matrix(req.seed, n, trial);
      std::optional<Matrix> spectral;
      std::optional<Matrix> reference;
      double spectral_ms = 0.0;
      double oracle_ms = 0.0;
      std::string status = "ok";
      try {
        const auto t0 = clock::now();
        spectral = evaluate_matrix_function(a, fn, req.t, EvaluationOptions{req.cluster_tol}).value;
        const auto t1 = clock::now();
        reference = oracle_matfun(a, fn.time_scaled(req.t));
        const auto t2 = clock::now();
        spectral_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
      } catch (const Error& e) {
        status = csv_safe(std::string("error: ") + e.what());
      }

      std::string err;
      if (spectral && reference) err = format_real(relative_frobenius_error(*spectral, *reference));
      for (const Method m : methods) {
        std::string wall;
        if (req.timing && status == "ok") {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3f", m == Method::spectral ? spectral_ms : oracle_ms);
          wall = buf;
        }
        outcome.output += std::to_string(n) + "," + std::to_string(trial) + "," +
                          std::to_string(req.seed) + "," +
                          (m == Method::spectral ? "spectral" : "oracle") + "," + err + "," + wall +
                          "," + status + "\n";
      }
    }
  }
  return outcome;
}

}  // namespace specmat
