#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "specmat/complex_matrix.hpp"
#include "specmat/scalar_function.hpp"

namespace specmat {

enum class Method { spectral, oracle, both };
enum class OutputKind { coeffs, matrix, both };

/// Process exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

struct JobRequest {
  std::string input_path;
  /// exp | sin | cos | poly:c0,c1,...
  std::string function = "exp";
  double t = 1.0;
  Method method = Method::spectral;
  OutputKind output = OutputKind::matrix;
  double cluster_tol = 1e-8;
  std::uint64_t seed = 0;
  /// bench: inclusive size range and trials per size
  std::size_t size_lo = 2;
  std::size_t size_hi = 4;
  std::size_t trials = 5;
  /// bench: fill the wall_ms column. Off by default so reruns are
  /// byte-identical.
  bool timing = false;
};

/// Parses exp, sin, cos or poly:c0,c1,... (real coefficients, c0 first).
/// Throws DomainError on anything else.
ScalarFunction parse_function(const std::string& spec);
Method parse_method(const std::string& s);
OutputKind parse_output(const std::string& s);
/// "lo..hi" or a single size.
std::pair<std::size_t, std::size_t> parse_size_range(const std::string& s);

/// SPECMAT_CLUSTER_TOL when set and valid, otherwise 1e-8. Throws
/// DomainError for an unparsable or negative value.
double default_cluster_tol();

struct JobOutcome {
  int exit_code = exit_code::ok;
  /// Result document, verify report or CSV.
  std::string output;
  /// Diagnostic text for stderr.
  std::string message;
};

JobOutcome run_eval(const JobRequest& req);
/// Runs the invariant checks on one input matrix; one PASS/FAIL line each.
JobOutcome run_verify(const JobRequest& req);
/// CSV with header n,trial,seed,method,err_rel,wall_ms,status; rows ordered by
/// (n, trial, method).
JobOutcome run_bench(const JobRequest& req);

/// Entries uniform on [0,1) x [0,1).
Matrix random_unit_square_matrix(std::size_t n, std::mt19937_64& rng);

/// Smallest pairwise distance between computed eigenvalues; 0 for n = 1.
double min_eigenvalue_gap(const Matrix& a);

/// Deterministic member of the benchmark family for (seed, n, trial):
/// unit-square entries, resampled until the eigenvalue gap is at least
/// `min_gap` and, when given, ||A||_F <= max_norm.
Matrix benchmark_matrix(std::uint64_t seed, std::size_t n, std::size_t trial,
                        double min_gap = 1e-2, std::optional<double> max_norm = std::nullopt);

}  // namespace specmat
