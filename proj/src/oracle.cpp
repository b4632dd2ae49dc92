#include "specmat/oracle.hpp"

#include <cmath>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

namespace {
constexpr unsigned kMaxTaylorTerms = 200;
constexpr unsigned kSquaringLimit = 60;
}  // namespace

void OracleConfig::validate() const {
  if (!(target_tolerance > 0.0 && target_tolerance <= 1e-2)) {
    throw DomainError("OracleConfig: target_tolerance must lie in (0, 1e-2]");
  }
  if (max_squarings > kSquaringLimit) {
    throw DomainError("OracleConfig: max_squarings must not exceed 60");
  }
}

Matrix oracle_expm(const Matrix& a, const OracleConfig& cfg) {
  cfg.validate();
  const std::size_t n = a.size();
  const double norm = frobenius_norm(a);

  unsigned s = 0;
  while (std::ldexp(norm, -static_cast<int>(s)) > 0.5) ++s;
  if (s > cfg.max_squarings) {
    throw DomainError("oracle_expm: ||A||_F needs " + std::to_string(s) +
                      " squarings, more than the configured " + std::to_string(cfg.max_squarings));
  }
  const Matrix scaled = scale(a, std::ldexp(1.0, -static_cast<int>(s)));

  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  const double cutoff = cfg.target_tolerance * std::ldexp(1.0, -static_cast<int>(s));
  bool converged = false;
  for (unsigned k = 1; k <= kMaxTaylorTerms; ++k) {
    term = scale(mat_mul(term, scaled), 1.0 / static_cast<double>(k));
    sum = add(sum, term);
    if (frobenius_norm(term) <= cutoff * frobenius_norm(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw DomainError("oracle_expm: Taylor series did not converge");

  for (unsigned k = 0; k < s; ++k) sum = mat_mul(sum, sum);
  return sum;
}

Matrix oracle_matfun(const Matrix& a, const ScalarFunction& fn, const OracleConfig& cfg) {
  const Matrix x = fn.time_scale() == 1.0 ? a : scale(a, fn.time_scale());
  const Complex i{0.0, 1.0};
  switch (fn.kind()) {
    case ScalarFunction::Kind::exp:
      return oracle_expm(x, cfg);
    case ScalarFunction::Kind::sin: {
      const Matrix plus = oracle_expm(scale(x, i), cfg);
      const Matrix minus = oracle_expm(scale(x, -i), cfg);
      return scale(subtract(plus, minus), 1.0 / (2.0 * i));
    }
    case ScalarFunction::Kind::cos: {
      const Matrix plus = oracle_expm(scale(x, i), cfg);
      const Matrix minus = oracle_expm(scale(x, -i), cfg);
      return scale(add(plus, minus), 0.5);
    }
    case ScalarFunction::Kind::monomial:
      return matrix_power(x, fn.monomial_power());
    case ScalarFunction::Kind::polynomial:
      return matrix_polynomial(x, fn.polynomial_coefficients());
    case ScalarFunction::Kind::tabulated:
      break;
  }
  throw UnsupportedFunctionError("oracle_matfun: no reference evaluation for " + fn.name());
}

}  // namespace specmat
