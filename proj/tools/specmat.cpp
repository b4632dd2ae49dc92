// Command-line front end: eval, coeffs, verify and bench.

#include <algorithm>
#include <cstdio>
#include <vector>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "specmat/error.hpp"
#include "specmat/jobs.hpp"

namespace {

struct RawFlags {
  std::string input;
  std::string fn = "exp";
  double t = 1.0;
  std::string method;
  std::string output;
  double cluster_tol = 0.0;
  std::string sizes = "2..4";
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::string out;
  bool timing = false;
};

int emit(const specmat::JobOutcome& outcome, const std::string& out_path) {
  if (!outcome.message.empty()) std::cerr << outcome.message << "\n";
  if (outcome.exit_code == specmat::exit_code::usage || outcome.exit_code == specmat::exit_code::numerical) {
    return outcome.exit_code;
  }
  if (out_path.empty()) {
    std::cout << outcome.output;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return specmat::exit_code::usage;
    }
    file << outcome.output;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix functions via Cayley-Hamilton spectral synthesis"};
  app.require_subcommand(1);
  RawFlags flags;
  std::vector<CLI::Option*> tol_options;

  auto add_eval_flags = [&](CLI::App* cmd, bool with_output) {
    cmd->add_option("--input", flags.input, "Matrix document")->required();
    cmd->add_option("--fn", flags.fn, "exp | sin | cos | poly:c0,c1,...");
    cmd->add_option("--t", flags.t, "Time parameter: evaluates F(tA)");
    cmd->add_option("--method", flags.method, "spectral | oracle | both");
    if (with_output) cmd->add_option("--output", flags.output, "coeffs | matrix | both");
    tol_options.push_back(cmd->add_option(
        "--cluster-tol", flags.cluster_tol,
        "Relative eigenvalue clustering tolerance (default: $SPECMAT_CLUSTER_TOL or 1e-8)"));
    cmd->add_option("--out", flags.out, "Write the result here instead of stdout");
  };

  CLI::App* eval = app.add_subcommand("eval", "Evaluate F(tA)");
  add_eval_flags(eval, true);
  CLI::App* coeffs = app.add_subcommand("coeffs", "Print the coefficients f_0..f_{n-1} only");
  add_eval_flags(coeffs, false);
  CLI::App* verify = app.add_subcommand("verify", "Check the method's invariants on one matrix");
  verify->add_option("--input", flags.input, "Matrix document")->required();
  verify->add_option("--fn", flags.fn, "exp | sin | cos | poly:c0,c1,...");
  verify->add_option("--t", flags.t, "Time parameter");
  tol_options.push_back(
      verify->add_option("--cluster-tol", flags.cluster_tol, "Relative eigenvalue clustering tolerance"));
  verify->add_option("--out", flags.out, "Write the report here instead of stdout");
  CLI::App* bench = app.add_subcommand("bench", "Spectral vs oracle accuracy sweep, CSV output");
  bench->add_option("--sizes", flags.sizes, "Matrix sizes, lo..hi");
  bench->add_option("--trials", flags.trials, "Random matrices per size");
  bench->add_option("--seed", flags.seed, "Base seed");
  bench->add_option("--fn", flags.fn, "exp | sin | cos | poly:c0,c1,...");
  bench->add_option("--t", flags.t, "Time parameter");
  bench->add_option("--method", flags.method, "spectral | oracle | both");
  tol_options.push_back(
      bench->add_option("--cluster-tol", flags.cluster_tol, "Relative eigenvalue clustering tolerance"));
  bench->add_flag("--timing", flags.timing, "Record wall time (output is then not reproducible)");
  bench->add_option("--out", flags.out, "Write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : specmat::exit_code::usage;
  }

  specmat::JobRequest req;
  try {
    req.input_path = flags.input;
    req.function = flags.fn;
    req.t = flags.t;
    const bool tol_given = std::any_of(tol_options.begin(), tol_options.end(),
                                       [](const CLI::Option* o) { return o->count() > 0; });
    req.cluster_tol = tol_given ? flags.cluster_tol : specmat::default_cluster_tol();
    if (!flags.method.empty()) req.method = specmat::parse_method(flags.method);
    if (!flags.output.empty()) req.output = specmat::parse_output(flags.output);
    if (coeffs->parsed()) req.output = specmat::OutputKind::coeffs;
    const auto [lo, hi] = specmat::parse_size_range(flags.sizes);
    req.size_lo = lo;
    req.size_hi = hi;
    req.trials = flags.trials;
    req.seed = flags.seed;
    req.timing = flags.timing;
  } catch (const specmat::Error& e) {
    std::cerr << e.what() << "\n";
    return specmat::exit_code::usage;
  }

  if (eval->parsed() || coeffs->parsed()) return emit(specmat::run_eval(req), flags.out);
  if (verify->parsed()) return emit(specmat::run_verify(req), flags.out);
  return emit(specmat::run_bench(req), flags.out);
}
