#pragma once

#include <numbers>
#include <optional>

namespace bandlim {

inline constexpr double kPi = std::numbers::pi;

/// Band edge, growth exponent, smoothness order and grid parameter of one
/// reconstruction problem. Construct through make() so the invariants hold.
struct BandConfig {
  double omega = 5.0 * kPi / 6.0;  // band edge, radians, in (0, pi)
  double alpha = 0.0;              // polynomial growth exponent
  int d = 1;                       // smoothness order of the spectral splice
  int N = 6;                       // even grid parameter

  /// Resolves d (smallest integer > alpha + 1/2) and N (select_n) when they
  /// are not given, then validates. Throws DomainError.
  static BandConfig make(double omega, double alpha = 0.0,
                         std::optional<int> d = std::nullopt,
                         std::optional<int> N = std::nullopt);

  void validate() const;
};

/// Smallest even integer strictly greater than omega / (pi - omega).
int select_n(double omega);

/// Smallest positive integer d with d > alpha + 1/2.
int min_smoothness(double alpha);

/// Position of t relative to the periodic g(t) grid.
///
/// t lies in [N + m, N + m + 1); t_reduced = t - m lies in [N, N + 1) and
/// g = pi N / t_reduced, so (t - m) g = pi N and g = pi exactly at integers.
struct GridPosition {
  double t = 0.0;
  long m = 0;
  double tau = 0.0;
  double t_reduced = 0.0;
  double g = kPi;

  bool on_integer() const { return tau == 0.0; }
};

GridPosition locate(double t, int N);

}  // namespace bandlim
