#include <bandlim/coefficients.hpp>

#include <bandlim/errors.hpp>
#include <bandlim/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace bandlim {

int tail_panels(long k_minus_m, double width, const QuadratureSpec& quad) {
  const double cycles = std::abs(static_cast<double>(k_minus_m)) * width / kPi;
  return std::max(quad.panels, 2 * static_cast<int>(std::ceil(cycles)));
}

double coefficient_by_integration(long k, double t, const SplicePolynomials& splice, long m,
                                  const QuadratureSpec& quad) {
  if (splice.degenerate()) {
    return static_cast<double>(k) == t ? 1.0 : 0.0;
  }
  const long n = m - k;
  const double freq = static_cast<double>(n);
  const double t_minus_k = t - static_cast<double>(k);

  // Core band: e^{i g (t - k)} = e^{i g (m - k)} because g (t - m) = pi N, N even.
  const double core = std::abs(t_minus_k) < 1e-9 ? 2.0 * splice.g
                                                  : 2.0 * std::sin(splice.g * freq) / t_minus_k;

  const GaussLegendre& rule = gauss_legendre(quad.nodes_per_panel);
  const int panels = tail_panels(n, splice.width, quad);
  const std::complex<double> upper = rule.integrate(
      [&](double w) { return splice.value(w) * std::polar(1.0, w * freq); }, splice.g, kPi, panels);
  const std::complex<double> lower = rule.integrate(
      [&](double w) { return std::conj(splice.value(-w)) * std::polar(1.0, w * freq); }, -kPi,
      -splice.g, panels);

  const std::complex<double> a = (core + upper + lower) / (2.0 * kPi);
  if (!(std::abs(a.imag()) < quad.abs_tol)) {
    throw IntegrityError("coefficient a_" + std::to_string(k) + " has imaginary part " +
                         std::to_string(a.imag()) + " above tolerance");
  }
  return a.real();
}

std::complex<double> oracle_coefficient(long k, const std::function<std::complex<double>(double)>& E,
                                        double seam, const QuadratureSpec& quad) {
  quad.validate();
  const GaussLegendre& rule = gauss_legendre(quad.nodes_per_panel);
  const double kd = static_cast<double>(k);
  auto integrand = [&](double w) { return E(w) * std::polar(1.0, -w * kd); };
  const double edges[] = {-kPi, -seam, seam, kPi};
  std::complex<double> sum{};
  for (int s = 0; s < 3; ++s) {
    if (edges[s + 1] > edges[s]) sum += rule.integrate(integrand, edges[s], edges[s + 1], quad.panels);
  }
  return sum / (2.0 * kPi);
}

CoefficientSeries coefficient_window_general(double t, int L, const BandConfig& config,
                                             const QuadratureSpec& quad, const SpliceOptions& options) {
  config.validate();
  quad.validate();
  if (L < 1) throw UsageError("window half-width L must be >= 1");

  const GridPosition pos = locate(t, config.N);
  const SplicePolynomials splice = build_splice(pos.t_reduced, config.d, config.N, options);

  CoefficientSeries series;
  series.method = Method::general;
  series.t = t;
  series.L = L;
  series.center = static_cast<long>(std::floor(t));
  series.values.assign(static_cast<std::size_t>(2 * L + 1), 0.0);
  parallel_for(series.values.size(), [&](std::size_t i) {
    const long k = series.first() + static_cast<long>(i);
    series.values[i] = coefficient_by_integration(k, t, splice, pos.m, quad);
  });
  return series;
}

}  // namespace bandlim
