#pragma once

#include <complex>
#include <functional>
#include <string>

namespace bandlim {

/// Unnormalized sinc, sin(x)/x.
double sinc(double x);

/// A test signal with an exact evaluator.
struct SignalSpec {
  std::function<std::complex<double>(double)> evaluate;
  double band_edge = 0.0;
  double growth_exponent = 0.0;
  std::string label;
  bool complex_valued = false;

  std::complex<double> operator()(double t) const { return evaluate(t); }
};

/// sinc(omega (t - 1) + 1/2) - 2 sinc(omega (t + 2) / sqrt 2 - 1).
SignalSpec make_sinc_combo(double omega);

/// t sin(omega (t - 1) / 1.0001 + 1/2) - 2 t sin(omega (t + 2) / sqrt 2 - 1).
SignalSpec make_linear_growth(double omega);

/// t^p e^{i omega0 t}.
SignalSpec make_tone(double omega0, int poly_degree);

}  // namespace bandlim
