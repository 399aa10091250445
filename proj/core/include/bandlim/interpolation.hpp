#pragma once

#include <bandlim/grid.hpp>
#include <bandlim/kernels.hpp>
#include <bandlim/quadrature.hpp>
#include <bandlim/signals.hpp>

#include <complex>
#include <span>
#include <vector>

namespace bandlim {

struct ErrorRow {
  Method method = Method::classical;
  double t = 0.0;
  int L = 0;
  std::complex<double> reconstructed;
  std::complex<double> truth;
  double abs_error = 0.0;
};

/// sum_k a_k x(k) over the window (or over its first/last `L` sub-window when
/// L < weights.L), in ascending k. `compensated` switches to Neumaier summation.
std::complex<double> reconstruct(const SignalSpec& signal, const CoefficientSeries& weights,
                                 int L = -1, bool compensated = false);

std::complex<double> interpolate(const SignalSpec& signal, double t, Method method, int L,
                                 const BandConfig& config, const QuadratureSpec& quad = {},
                                 bool compensated = false);

/// One row per (method, L), ordered by method then L as given. Weights are
/// computed once per method at the largest L.
std::vector<ErrorRow> truncation_sweep(const SignalSpec& signal, double t, std::span<const int> Ls,
                                       std::span<const Method> methods, const BandConfig& config,
                                       const QuadratureSpec& quad = {}, bool compensated = false);

/// t -> signal(mu t). Throws DomainError unless mu > 0 and mu * band_edge < pi.
SignalSpec rescale(const SignalSpec& signal, double mu);

}  // namespace bandlim
