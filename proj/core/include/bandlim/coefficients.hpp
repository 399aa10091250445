#pragma once

#include <bandlim/grid.hpp>
#include <bandlim/kernels.hpp>
#include <bandlim/quadrature.hpp>
#include <bandlim/splice.hpp>

#include <complex>
#include <functional>

namespace bandlim {

/// Panel count used for the tail integral of frequency |k - m| over a splice of
/// the given width.
int tail_panels(long k_minus_m, double width, const QuadratureSpec& quad);

/// a_k(t) from the splice: the core band [-g, g] in closed form, both tails by
/// composite Gauss-Legendre. The assembled imaginary part must stay below
/// quad.abs_tol, otherwise IntegrityError.
double coefficient_by_integration(long k, double t, const SplicePolynomials& splice, long m,
                                  const QuadratureSpec& quad);

/// Brute-force (1/2pi) \int_{-pi}^{pi} E(omega) e^{-i omega k} d omega with panel
/// boundaries at -pi, -seam, seam, pi. Each of the three segments gets
/// quad.panels panels. The imaginary part is returned untouched.
std::complex<double> oracle_coefficient(long k, const std::function<std::complex<double>(double)>& E,
                                        double seam, const QuadratureSpec& quad);

/// Window of general-d weights around floor(t). The splice is built once for
/// t - m; coefficients for different k are computed independently (in parallel
/// when allowed) and are identical to a sequential evaluation.
CoefficientSeries coefficient_window_general(double t, int L, const BandConfig& config,
                                             const QuadratureSpec& quad = {},
                                             const SpliceOptions& options = {});

}  // namespace bandlim
