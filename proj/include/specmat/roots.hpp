#pragma once

#include <cstddef>
#include <vector>

#include "specmat/charpoly.hpp"
#include "specmat/complex_matrix.hpp"

namespace specmat {

/// Relative residual |p(alpha)| / max(1, max_j |p_j|) every accepted root meets.
inline constexpr double kRootResidualTolerance = 1e-8;
/// Default clustering tolerance, relative to max(1, max_k |alpha_k|).
inline constexpr double kDefaultClusterTolerance = 1e-8;

/// All n roots of a degree-n polynomial, with repetition.
struct Spectrum {
  std::vector<Complex> values;
  /// |p(values[k])|, unscaled.
  std::vector<double> residuals;

  std::size_t size() const noexcept { return values.size(); }
  double max_residual() const noexcept;
};

struct SpectralNode {
  Complex value;
  std::size_t multiplicity = 1;
};

/// Roots merged into nodes by single-linkage clustering. Multiplicities sum to
/// the degree, and distinct node values are further apart than the tolerance
/// used to build them.
struct ClusteredSpectrum {
  std::vector<SpectralNode> nodes;

  std::size_t total_multiplicity() const noexcept;
  std::size_t max_multiplicity() const noexcept;
  bool all_simple() const noexcept { return max_multiplicity() <= 1; }
  /// Each node value repeated by its multiplicity, equal values adjacent.
  std::vector<Complex> expanded() const;
};

/// Fills Spectrum::residuals for the given values.
Spectrum make_spectrum(const CharacteristicPolynomial& p, std::vector<Complex> values);

/// Radical formulas for degree 1..4: quadratic formula, Cardano for cubics,
/// Ferrari for quartics. Everything runs in complex arithmetic with principal
/// roots. Throws DomainError above degree 4.
Spectrum solve_closed(const CharacteristicPolynomial& p);

struct AberthOptions {
  std::size_t max_sweeps = 200;
  double correction_tolerance = 1e-13;
};

/// Aberth-Ehrlich simultaneous iteration for any degree. Throws
/// ConvergenceError (carrying the last iterate) if the sweep budget runs out
/// with some root still failing the residual bound.
Spectrum solve_general(const CharacteristicPolynomial& p, const AberthOptions& options = {});

/// solve_closed up to degree 4, solve_general beyond.
Spectrum solve(const CharacteristicPolynomial& p);

/// Single-linkage grouping with link distance tol * max(1, max_k |alpha_k|).
/// Each group becomes one node at its arithmetic mean.
ClusteredSpectrum cluster(const Spectrum& s, double tol = kDefaultClusterTolerance);

}  // namespace specmat
