#include <bandlim/interpolation.hpp>

#include <bandlim/errors.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace bandlim {

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

std::complex<double> reconstruct(const SignalSpec& signal, const CoefficientSeries& weights, int L,
                                 bool compensated) {
  if (L < 0) L = weights.L;
  if (L < 1 || L > weights.L) {
    throw UsageError("sub-window L=" + std::to_string(L) + " outside [1, " + std::to_string(weights.L) + "]");
  }
  const long lo = weights.center - L;
  const long hi = weights.center + L;
  if (compensated) {
    CompensatedSum re;
    CompensatedSum im;
    for (long k = lo; k <= hi; ++k) {
      const std::complex<double> term = weights.at(k) * signal(static_cast<double>(k));
      re.add(term.real());
      im.add(term.imag());
    }
    return {re.value(), im.value()};
  }
  std::complex<double> acc{};
  for (long k = lo; k <= hi; ++k) {
    acc += weights.at(k) * signal(static_cast<double>(k));
  }
  return acc;
}

std::complex<double> interpolate(const SignalSpec& signal, double t, Method method, int L,
                                 const BandConfig& config, const QuadratureSpec& quad, bool compensated) {
  return reconstruct(signal, kernel_window(method, t, L, config, quad), L, compensated);
}

std::vector<ErrorRow> truncation_sweep(const SignalSpec& signal, double t, std::span<const int> Ls,
                                       std::span<const Method> methods, const BandConfig& config,
                                       const QuadratureSpec& quad, bool compensated) {
  if (Ls.empty()) throw UsageError("truncation sweep needs at least one L");
  if (methods.empty()) throw UsageError("truncation sweep needs at least one method");
  const int max_L = *std::max_element(Ls.begin(), Ls.end());
  const std::complex<double> truth = signal(t);

  std::vector<ErrorRow> rows;
  rows.reserve(Ls.size() * methods.size());
  for (const Method method : methods) {
    const CoefficientSeries weights = kernel_window(method, t, max_L, config, quad);
    for (const int L : Ls) {
      ErrorRow row;
      row.method = method;
      row.t = t;
      row.L = L;
      row.reconstructed = reconstruct(signal, weights, L, compensated);
      row.truth = truth;
      row.abs_error = std::abs(row.reconstructed - row.truth);
      rows.push_back(row);
    }
  }
  return rows;
}

SignalSpec rescale(const SignalSpec& signal, double mu) {
  if (!(mu > 0.0)) throw DomainError("rescaling factor must be positive");
  if (!(mu * signal.band_edge < kPi)) {
    throw DomainError("rescaled band edge " + std::to_string(mu * signal.band_edge) + " is not below pi");
  }
  SignalSpec out = signal;
  out.evaluate = [inner = signal.evaluate, mu](double t) { return inner(mu * t); };
  out.band_edge = mu * signal.band_edge;
  out.label = signal.label + "@" + std::to_string(mu);
  return out;
}

}  // namespace bandlim
