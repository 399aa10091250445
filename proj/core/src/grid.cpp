#include <bandlim/grid.hpp>

#include <bandlim/errors.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace bandlim {

namespace {

void require_band(double omega) {
  if (!(omega > 0.0 && omega < kPi)) {
    throw DomainError("band edge must lie in (0, pi), got " + std::to_string(omega));
  }
}

}  // namespace

int select_n(double omega) {
  require_band(omega);
  const double ratio = omega / (kPi - omega);
  int n = 2 * (static_cast<int>(std::floor(ratio / 2.0)) + 1);
  // Rounding in ratio must not leave pi N / (N + 1) <= omega.
  while (!(n > ratio) || !(kPi * n / (n + 1) > omega)) {
    n += 2;
  }
  return n;
}

int min_smoothness(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("growth exponent must be a finite value >= 0");
  }
  return static_cast<int>(std::floor(alpha + 0.5)) + 1;
}

BandConfig BandConfig::make(double omega, double alpha, std::optional<int> d, std::optional<int> N) {
  require_band(omega);
  BandConfig config;
  config.omega = omega;
  config.alpha = alpha;
  config.d = d ? *d : min_smoothness(alpha);
  config.N = N ? *N : select_n(omega);
  config.validate();
  return config;
}

void BandConfig::validate() const {
  require_band(omega);
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("growth exponent must be a finite value >= 0");
  }
  if (d < 1 || !(d > alpha + 0.5)) {
    throw DomainError("smoothness order d=" + std::to_string(d) + " must satisfy d >= 1 and d > alpha + 1/2");
  }
  if (N < 2 || N % 2 != 0) {
    throw DomainError("grid parameter N=" + std::to_string(N) + " must be a positive even integer");
  }
  if (!(N > omega / (kPi - omega)) || !(kPi * N / (N + 1) > omega)) {
    throw DomainError("grid parameter N=" + std::to_string(N) + " too small for band edge " +
                      std::to_string(omega));
  }
}

GridPosition locate(double t, int N) {
  if (N < 2 || N % 2 != 0) {
    throw DomainError("grid parameter N must be a positive even integer");
  }
  GridPosition pos;
  pos.t = t;
  pos.m = static_cast<long>(std::floor(t - N));
  pos.t_reduced = t - static_cast<double>(pos.m);
  // Rounding in t - N or t - m can push t_reduced out of [N, N + 1) next to an
  // interval boundary; step m, and clamp when neither side is representable.
  const double upper = std::nextafter(N + 1.0, 0.0);
  if (pos.t_reduced >= N + 1.0) {
    const double next = t - static_cast<double>(pos.m + 1);
    if (next >= N) {
      ++pos.m;
      pos.t_reduced = next;
    } else {
      pos.t_reduced = upper;
    }
  } else if (pos.t_reduced < N) {
    --pos.m;
    pos.t_reduced = std::min(t - static_cast<double>(pos.m), upper);
  }
  pos.tau = pos.t_reduced - N;
  pos.g = pos.tau == 0.0 ? kPi : kPi * N / pos.t_reduced;
  return pos;
}

}  // namespace bandlim
