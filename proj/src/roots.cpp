#include "specmat/roots.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "specmat/error.hpp"

namespace specmat {

namespace {

// Roots of z^2 + b z + c. Picks the sign that avoids cancellation and gets
// the second root from the product.
std::array<Complex, 2> solve_quadratic(Complex b, Complex c) {
  Complex d = std::sqrt(b * b - 4.0 * c);
  if (std::real(std::conj(b) * d) < 0.0) d = -d;
  const Complex q = -0.5 * (b + d);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q, c / q};
}

// Roots of z^3 + a2 z^2 + a1 z + a0 via the depressed cubic x^3 + a x + b.
std::array<Complex, 3> solve_cubic(Complex a2, Complex a1, Complex a0) {
  const Complex shift = a2 / 3.0;
  const Complex a = a1 - a2 * a2 / 3.0;
  const Complex b = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

  const Complex disc = std::sqrt(b * b / 4.0 + a * a * a / 27.0);
  Complex w = -0.5 * b + disc;
  const Complex w_alt = -0.5 * b - disc;
  if (std::abs(w_alt) > std::abs(w)) w = w_alt;

  const Complex u = std::pow(w, 1.0 / 3.0);
  if (u == Complex{}) return {-shift, -shift, -shift};
  const Complex v = -a / (3.0 * u);

  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex omega2 = std::conj(omega);
  return {u + v - shift, omega * u + omega2 * v - shift, omega2 * u + omega * v - shift};
}

// Roots of z^4 + a3 z^3 + a2 z^2 + a1 z + a0 by Ferrari's resolvent cubic.
std::array<Complex, 4> solve_quartic(Complex a3, Complex a2, Complex a1, Complex a0) {
  const Complex shift = a3 / 4.0;
  const Complex s2 = shift * shift;
  // Depressed quartic y^4 + a y^2 + b y + c.
  const Complex a = a2 - 6.0 * s2;
  const Complex b = a1 - 2.0 * a2 * shift + 8.0 * s2 * shift;
  const Complex c = a0 - a1 * shift + a2 * s2 - 3.0 * s2 * s2;

  // (y^2 + a/2 + m)^2 = (s y - b/(2s))^2 with s^2 = 2m, where m solves
  // m^3 + a m^2 + (a^2/4 - c) m - b^2/8 = 0.
  const auto resolvent = solve_cubic(a, a * a / 4.0 - c, -b * b / 8.0);
  Complex m = resolvent[0];
  for (const Complex r : resolvent) {
    if (std::abs(r) > std::abs(m)) m = r;
  }
  if (m == Complex{}) return {-shift, -shift, -shift, -shift};

  const Complex s = std::sqrt(2.0 * m);
  const Complex half = a / 2.0 + m;
  const Complex tilt = b / (2.0 * s);
  const auto first = solve_quadratic(-s, half + tilt);
  const auto second = solve_quadratic(s, half - tilt);
  return {first[0] - shift, first[1] - shift, second[0] - shift, second[1] - shift};
}

// Bound on the rounding error of Horner evaluation of p at z.
double horner_error_bound(const CharacteristicPolynomial& p, Complex z) {
  const double r = std::abs(z);
  double acc = 1.0;
  for (const Complex pj : p.coefficients()) acc = acc * r + std::abs(pj);
  return std::numeric_limits<double>::epsilon() * acc;
}

// Offsets from the first member keep the mean of identical values exact.
Complex group_mean(const std::vector<Complex>& g) {
  Complex acc = 0.0;
  for (const Complex z : g) acc += z - g.front();
  return g.front() + acc / static_cast<double>(g.size());
}

}  // namespace

double Spectrum::max_residual() const noexcept {
  double m = 0.0;
  for (const double r : residuals) m = std::max(m, r);
  return m;
}

std::size_t ClusteredSpectrum::total_multiplicity() const noexcept {
  std::size_t total = 0;
  for (const auto& node : nodes) total += node.multiplicity;
  return total;
}

std::size_t ClusteredSpectrum::max_multiplicity() const noexcept {
  std::size_t m = 0;
  for (const auto& node : nodes) m = std::max(m, node.multiplicity);
  return m;
}

std::vector<Complex> ClusteredSpectrum::expanded() const {
  std::vector<Complex> out;
  out.reserve(total_multiplicity());
  for (const auto& node : nodes) out.insert(out.end(), node.multiplicity, node.value);
  return out;
}

Spectrum make_spectrum(const CharacteristicPolynomial& p, std::vector<Complex> values) {
  Spectrum s{std::move(values), {}};
  s.residuals.reserve(s.values.size());
  for (const Complex z : s.values) s.residuals.push_back(std::abs(p.evaluate(z)));
  return s;
}

Spectrum solve_closed(const CharacteristicPolynomial& p) {
  auto c = [&](std::size_t j) { return p.coefficient(j); };
  switch (p.degree()) {
    case 1:
      return make_spectrum(p, {-c(1)});
    case 2: {
      const auto r = solve_quadratic(c(1), c(2));
      return make_spectrum(p, {r.begin(), r.end()});
    }
    case 3: {
      const auto r = solve_cubic(c(1), c(2), c(3));
      return make_spectrum(p, {r.begin(), r.end()});
    }
    case 4: {
      const auto r = solve_quartic(c(1), c(2), c(3), c(4));
      return make_spectrum(p, {r.begin(), r.end()});
    }
    default:
      throw DomainError("solve_closed: no radical formula for degree " +
                        std::to_string(p.degree()) + "; use solve_general");
  }
}

Spectrum solve_general(const CharacteristicPolynomial& p, const AberthOptions& options) {
  const std::size_t n = p.degree();
  if (n == 1) return make_spectrum(p, {-p.coefficient(1)});

  // Start on a circle enclosing every root, angles offset so no start point
  // sits on a symmetry axis of a real polynomial.
  const double radius = 1.0 + [&] {
    double m = 0.0;
    for (const Complex pj : p.coefficients()) m = std::max(m, std::abs(pj));
    return m;
  }();
  constexpr double kAngleOffset = 0.4;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                  static_cast<double>(n) +
                              kAngleOffset);
  }

  std::vector<bool> done(n, false);
  for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto [value, deriv] = p.evaluate_with_derivative(z[i]);
      if (std::abs(value) <= horner_error_bound(p, z[i])) {
        done[i] = true;
        continue;
      }
      const Complex ratio = value / deriv;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!is_finite(step)) continue;
      z[i] -= step;
      if (std::abs(step) <= options.correction_tolerance * (1.0 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done && std::all_of(done.begin(), done.end(), [](bool d) { return d; })) break;
  }

  Spectrum s = make_spectrum(p, std::move(z));
  const double bound = kRootResidualTolerance * p.coefficient_scale();
  if (s.max_residual() > bound) {
    throw ConvergenceError("solve_general: Aberth iteration did not converge in " +
                               std::to_string(options.max_sweeps) + " sweeps",
                           s.values, s.residuals);
  }
  return s;
}

Spectrum solve(const CharacteristicPolynomial& p) {
  return p.degree() <= 4 ? solve_closed(p) : solve_general(p);
}

ClusteredSpectrum cluster(const Spectrum& s, double tol) {
  if (!(tol >= 0.0)) throw DomainError("cluster: tolerance must be nonnegative");
  const std::size_t n = s.values.size();
  double scale = 1.0;
  for (const Complex z : s.values) scale = std::max(scale, std::abs(z));
  const double link = tol * scale;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::size_t i, std::size_t j) {
    const std::size_t ri = find(i);
    const std::size_t rj = find(j);
    if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(s.values[i] - s.values[j]) <= link) unite(i, j);
    }
  }

  // Members of each group in input order; groups ordered by first member.
  std::vector<std::vector<Complex>> groups;
  std::vector<std::size_t> group_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (group_of[root] == n) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(s.values[i]);
  }

  // Means of separate groups can still land within the link distance; merge
  // those too so node values stay separated.
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < groups.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < groups.size() && !merged; ++j) {
        if (std::abs(group_mean(groups[i]) - group_mean(groups[j])) <= link) {
          groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
          groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
  }

  ClusteredSpectrum out;
  out.nodes.reserve(groups.size());
  for (const auto& g : groups) out.nodes.push_back({group_mean(g), g.size()});
  return out;
}

}  // namespace specmat
