#pragma once

#include <span>
#include <vector>

namespace bandlim {

/// Composite Gauss-Legendre settings for the oscillatory tail integrals.
struct QuadratureSpec {
  int panels = 8;            // minimum panels per integration segment
  int nodes_per_panel = 16;  // Gauss-Legendre order
  double abs_tol = 1e-9;     // bound on the discarded imaginary part

  void validate() const;

  /// Rule of thumb for resolving e^{i omega n} over an interval of the given
  /// width: panels * nodes >= 8 (1 + |n| width / pi).
  bool resolves(long frequency, double width, int panel_count) const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Integrates f over [a, b] split into `panels` equal panels.
  template <class F>
  auto integrate(F&& f, double a, double b, int panels) const {
    using R = decltype(f(a));
    R sum{};
    const double step = (b - a) / panels;
    const double half = 0.5 * step;
    for (int p = 0; p < panels; ++p) {
      const double mid = a + (p + 0.5) * step;
      R panel{};
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        panel += weights_[i] * f(mid + half * nodes_[i]);
      }
      sum += half * panel;
    }
    return sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Shared, lazily built rule of the given order. Thread-safe.
const GaussLegendre& gauss_legendre(int order);

}  // namespace bandlim
