#include <bandlim/signals.hpp>

#include <bandlim/errors.hpp>
#include <bandlim/grid.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace bandlim {

namespace {

void require_band(double omega) {
  if (!(omega > 0.0 && omega < kPi)) {
    throw DomainError("signal band edge must lie in (0, pi)");
  }
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

SignalSpec make_sinc_combo(double omega) {
  require_band(omega);
  SignalSpec s;
  s.evaluate = [omega](double t) -> std::complex<double> {
    return sinc(omega * (t - 1.0) + 0.5) - 2.0 * sinc(omega * (t + 2.0) / std::numbers::sqrt2 - 1.0);
  };
  s.band_edge = omega;
  s.growth_exponent = 0.0;
  s.label = "sinc-combo";
  return s;
}

SignalSpec make_linear_growth(double omega) {
  require_band(omega);
  SignalSpec s;
  s.evaluate = [omega](double t) -> std::complex<double> {
    return t * std::sin(omega * (t - 1.0) / 1.0001 + 0.5) -
           2.0 * t * std::sin(omega * (t + 2.0) / std::numbers::sqrt2 - 1.0);
  };
  s.band_edge = omega;
  s.growth_exponent = 1.0;
  s.label = "linear-growth";
  return s;
}

SignalSpec make_tone(double omega0, int poly_degree) {
  if (!(std::abs(omega0) < kPi)) throw DomainError("tone frequency must satisfy |omega0| < pi");
  if (poly_degree < 0) throw DomainError("tone polynomial degree must be >= 0");
  SignalSpec s;
  s.evaluate = [omega0, poly_degree](double t) {
    return std::pow(t, poly_degree) * std::polar(1.0, omega0 * t);
  };
  s.band_edge = std::abs(omega0);
  s.growth_exponent = poly_degree;
  s.label = "tone:" + std::to_string(omega0) + ":" + std::to_string(poly_degree);
  s.complex_valued = true;
  return s;
}

}  // namespace bandlim
