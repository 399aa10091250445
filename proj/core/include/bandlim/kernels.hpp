#pragma once

#include <bandlim/grid.hpp>
#include <bandlim/quadrature.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bandlim {

enum class Method {
  classical,  // Whittaker-Shannon-Kotelnikov cardinal series
  d1,         // closed-form weights with first-order splice
  general,    // weights integrated from a smoothness-d splice
};

std::string_view to_string(Method method);

/// Accepts "classical", "d1", "general" (also "general-d"). Throws UsageError.
Method parse_method(std::string_view name);

/// Interpolation weights a_k(t) for k in [center - L, center + L],
/// center = floor(t).
struct CoefficientSeries {
  Method method = Method::classical;
  double t = 0.0;
  int L = 0;
  long center = 0;
  std::vector<double> values;

  long first() const { return center - L; }
  long last() const { return center + L; }
  bool contains(long k) const { return k >= first() && k <= last(); }
  double at(long k) const { return values.at(static_cast<std::size_t>(k - first())); }
};

/// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

/// Classical cardinal weight sin(pi (k - t)) / (pi (k - t)).
double wsk_coefficient(long k, double t);

/// Closed-form weight for the first-order splice:
/// a_m(t) = 1 - g/pi and (t - m) sin(g (k - m)) / (pi (k - m)(k - t)) otherwise.
double d1_coefficient(long k, double t, int N);

/// Same weight through the sinc form N sinc(g (k - m)) / (k - t).
double d1_coefficient_sinc_form(long k, double t, int N);

/// Window of weights for any method; `general` delegates to the quadrature
/// engine with `quad`.
CoefficientSeries kernel_window(Method method, double t, int L, const BandConfig& config,
                                const QuadratureSpec& quad = {});

}  // namespace bandlim
