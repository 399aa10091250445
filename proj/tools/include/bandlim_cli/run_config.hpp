#pragma once

#include <bandlim/bandlim.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bandlim::cli {

/// Everything one CLI invocation needs. Defaults reproduce the reference
/// experiment: omega = 5pi/6, t = -1.71, alpha = 1 (so general uses d = 2).
struct RunConfig {
  double omega = 5.0 * kPi / 6.0;
  double alpha = 1.0;
  std::optional<int> d;
  std::optional<int> N;
  double t = -1.71;
  std::vector<int> Ls{50, 100, 500};
  std::vector<Method> methods{Method::classical, Method::d1, Method::general};
  std::string signal = "sinc-combo";
  std::string out;
  int panels = 8;
  int nodes = 16;
  double abs_tol = 1e-9;
  bool compensated = false;
  bool pin_q_slope = false;

  // seams only
  int points = 100;
  bool corrupt = false;
  std::string splice_dump;

  BandConfig band() const;
  QuadratureSpec quadrature() const;
  int max_L() const;
};

/// Radians from "2.5", "pi", "-pi/3", "5pi/6", "0.95pi" or "5*pi/6".
/// Throws UsageError.
double parse_radians(std::string_view text);

/// "sinc-combo", "linear-growth" or "tone:<omega0>:<p>". Throws UsageError.
SignalSpec parse_signal(std::string_view text, double omega);

}  // namespace bandlim::cli
