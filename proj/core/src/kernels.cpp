#include <bandlim/kernels.hpp>

#include <bandlim/coefficients.hpp>
#include <bandlim/errors.hpp>
#include <bandlim/parallel.hpp>

#include <cmath>
#include <string>

namespace bandlim {

namespace {

constexpr double kSingularity = 1e-9;

CoefficientSeries empty_window(Method method, double t, int L) {
  if (L < 1) throw UsageError("window half-width L must be >= 1");
  CoefficientSeries series;
  series.method = method;
  series.t = t;
  series.L = L;
  series.center = static_cast<long>(std::floor(t));
  series.values.assign(static_cast<std::size_t>(2 * L + 1), 0.0);
  return series;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::classical:
      return "classical";
    case Method::d1:
      return "d1";
    case Method::general:
      return "general";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "classical" || name == "wsk") return Method::classical;
  if (name == "d1") return Method::d1;
  if (name == "general" || name == "general-d") return Method::general;
  throw UsageError("unknown method '" + std::string(name) + "' (expected classical, d1 or general)");
}

double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;  // exact, |r| <= 1/2
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double wsk_coefficient(long k, double t) {
  const double x = static_cast<double>(k) - t;
  if (std::abs(x) < kSingularity) {
    const double px = kPi * x;
    return 1.0 - px * px / 6.0;
  }
  return sin_pi(x) / (kPi * x);
}

double d1_coefficient(long k, double t, int N) {
  const GridPosition pos = locate(t, N);
  if (pos.on_integer()) {
    return static_cast<double>(k) == t ? 1.0 : 0.0;
  }
  if (k == pos.m) return 1.0 - pos.g / kPi;
  const double k_minus_t = static_cast<double>(k) - t;
  if (std::abs(k_minus_t) < kSingularity) return 1.0;
  const double k_minus_m = static_cast<double>(k - pos.m);
  return pos.t_reduced * std::sin(pos.g * k_minus_m) / (kPi * k_minus_m * k_minus_t);
}

double d1_coefficient_sinc_form(long k, double t, int N) {
  const GridPosition pos = locate(t, N);
  if (pos.on_integer()) {
    return static_cast<double>(k) == t ? 1.0 : 0.0;
  }
  if (k == pos.m) return 1.0 - pos.g / kPi;
  const double k_minus_t = static_cast<double>(k) - t;
  if (std::abs(k_minus_t) < kSingularity) return 1.0;
  const double x = pos.g * static_cast<double>(k - pos.m);
  const double sinc = std::abs(x) < kSingularity ? 1.0 : std::sin(x) / x;
  return N * sinc / k_minus_t;
}

CoefficientSeries kernel_window(Method method, double t, int L, const BandConfig& config,
                                const QuadratureSpec& quad) {
  switch (method) {
    case Method::classical: {
      CoefficientSeries series = empty_window(method, t, L);
      for (std::size_t i = 0; i < series.values.size(); ++i) {
        series.values[i] = wsk_coefficient(series.first() + static_cast<long>(i), t);
      }
      return series;
    }
    case Method::d1: {
      config.validate();
      CoefficientSeries series = empty_window(method, t, L);
      for (std::size_t i = 0; i < series.values.size(); ++i) {
        series.values[i] = d1_coefficient(series.first() + static_cast<long>(i), t, config.N);
      }
      return series;
    }
    case Method::general:
      return coefficient_window_general(t, L, config, quad);
  }
  throw UsageError("unknown interpolation method");
}

}  // namespace bandlim
