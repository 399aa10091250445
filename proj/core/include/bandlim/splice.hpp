#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

namespace bandlim {

struct SpliceOptions {
  /// Also impose Q'(pi) = 0 for d >= 2. Not required for periodicity.
  bool pin_q_slope_at_pi = false;
};

/// Polynomial continuation P + iQ of e^{i omega t_reduced} from the seam
/// omega = g to omega = pi.
///
/// Both polynomials are held in the normalized variable s = (omega - g) / width
/// with width = pi - g, as two Taylor expansions of the same polynomial:
/// `p_coeffs`/`q_coeffs` around s = 0 (omega = g) and
/// `p_coeffs_pi`/`q_coeffs_pi` around s = 1 (omega = pi). Coefficients are in
/// ascending degree. Each seam is evaluated from its own expansion, so the
/// derivative conditions there hold to rounding even for narrow splices.
///
/// At tau = 0 the splice interval is empty (g = pi); width is then set to 1
/// and both expansions hold the Taylor polynomial of the exponential.
struct SplicePolynomials {
  double t_reduced = 0.0;
  double g = 0.0;
  double width = 0.0;
  int d = 1;
  int N = 0;
  bool pin_q_slope_at_pi = false;
  std::vector<double> p_coeffs;
  std::vector<double> q_coeffs;
  std::vector<double> p_coeffs_pi;
  std::vector<double> q_coeffs_pi;

  bool degenerate() const { return t_reduced == static_cast<double>(N); }

  /// (P + iQ)(omega) for omega in [g, pi].
  std::complex<double> value(double omega) const;

  /// j-th omega-derivative of P + iQ at omega = g.
  std::complex<double> derivative_at_seam(int j) const;

  /// j-th omega-derivative of P + iQ at omega = pi.
  std::complex<double> derivative_at_pi(int j) const;
};

/// Builds the minimal-degree splice of smoothness d for t_reduced in [N, N+1).
/// Throws DomainError for arguments out of range and IntegrityError when the
/// constraint system is singular.
SplicePolynomials build_splice(double t_reduced, int d, int N, const SpliceOptions& options = {});

/// E(t, omega) = E_N(t - m, omega) e^{i omega m} on [-pi, pi], where the splice
/// was built for t_reduced = t - m. Negative frequencies use the reflection
/// E(-omega) = conj(E(omega)) of the reduced extension. Throws DomainError for
/// |omega| > pi.
std::complex<double> eval_extension(const SplicePolynomials& splice, long m, double omega);

/// Seam diagnostics, in order:
///   [0, d)   |E^(j)(g) - (i t_reduced)^j|
///   [d, 2d)  |E^(j)(pi) - E^(j)(-pi)|
///   [2d]     max |difference| of the two expansions over [g, pi]
std::vector<double> seam_residuals(const SplicePolynomials& splice);

/// Debug dump: one row per coefficient, then one row per residual.
void write_splice_csv(std::ostream& out, const SplicePolynomials& splice);

}  // namespace bandlim
