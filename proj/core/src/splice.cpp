#include <bandlim/splice.hpp>

#include <bandlim/errors.hpp>
#include <bandlim/grid.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace bandlim {

namespace {

// p! / (p - j)!
double falling(int p, int j) {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= static_cast<double>(p - i);
  return r;
}

double factorial(int j) { return falling(j, j); }

// (i t)^j with the phase i^j applied exactly.
std::complex<double> i_power(double t, int j) {
  const double mag = std::pow(t, j);
  switch (j % 4) {
    case 0:
      return {mag, 0.0};
    case 1:
      return {0.0, mag};
    case 2:
      return {-mag, 0.0};
    default:
      return {0.0, -mag};
  }
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Eigen::VectorXd solve_square(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.rows() == 0) return {};
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) {
    throw IntegrityError("splice constraint system is singular");
  }
  return lu.solve(b);
}

// Scaled targets at the seam: d^j/ds^j of the polynomial at s = 0 equals
// seam[j] (omega-derivative times width^j). `at_pi` lists the orders that
// vanish at s = 1.
struct Constraints {
  std::vector<double> seam;
  std::vector<int> at_pi;

  int size() const { return static_cast<int>(seam.size() + at_pi.size()); }
  bool pinned_at_pi(int order) const {
    return std::find(at_pi.begin(), at_pi.end(), order) != at_pi.end();
  }
};

// Expansion around s = 0: seam orders are read off directly, the remaining
// coefficients come from the conditions at s = 1.
std::vector<double> expand_at_seam(const Constraints& cs) {
  const int n = cs.size();
  const int d = static_cast<int>(cs.seam.size());
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < d; ++j) c[j] = cs.seam[j] / factorial(j);

  const int free = n - d;
  Eigen::MatrixXd a(free, free);
  Eigen::VectorXd b(free);
  for (int r = 0; r < free; ++r) {
    const int j = cs.at_pi[r];
    double known = 0.0;
    for (int p = j; p < d; ++p) known += c[p] * falling(p, j);
    b(r) = -known;
    for (int col = 0; col < free; ++col) {
      const int p = d + col;
      a(r, col) = p >= j ? falling(p, j) : 0.0;
    }
  }
  const Eigen::VectorXd x = solve_square(a, b);
  for (int col = 0; col < free; ++col) c[d + col] = x(col);
  return c;
}

// Expansion around s = 1 (variable u = s - 1): the vanishing orders are zero
// by construction, the rest come from the seam conditions at u = -1.
std::vector<double> expand_at_pi(const Constraints& cs) {
  const int n = cs.size();
  const int d = static_cast<int>(cs.seam.size());
  std::vector<int> unknown;
  for (int p = 0; p < n; ++p) {
    if (!cs.pinned_at_pi(p)) unknown.push_back(p);
  }
  if (static_cast<int>(unknown.size()) != d) {
    throw IntegrityError("splice constraint orders exceed polynomial degree");
  }
  Eigen::MatrixXd a(d, d);
  Eigen::VectorXd b(d);
  for (int j = 0; j < d; ++j) {
    b(j) = cs.seam[j];
    for (int col = 0; col < d; ++col) {
      const int p = unknown[col];
      a(j, col) = p >= j ? falling(p, j) * (((p - j) % 2 == 0) ? 1.0 : -1.0) : 0.0;
    }
  }
  const Eigen::VectorXd x = solve_square(a, b);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int col = 0; col < d; ++col) e[unknown[col]] = x(col);
  return e;
}

double derivative(const std::vector<double>& c, int j, double width) {
  if (j >= static_cast<int>(c.size())) return 0.0;
  return factorial(j) * c[j] / std::pow(width, j);
}

}  // namespace

std::complex<double> SplicePolynomials::value(double omega) const {
  const double s = (omega - g) / width;
  if (s <= 0.5) return {horner(p_coeffs, s), horner(q_coeffs, s)};
  return {horner(p_coeffs_pi, s - 1.0), horner(q_coeffs_pi, s - 1.0)};
}

std::complex<double> SplicePolynomials::derivative_at_seam(int j) const {
  return {derivative(p_coeffs, j, width), derivative(q_coeffs, j, width)};
}

std::complex<double> SplicePolynomials::derivative_at_pi(int j) const {
  return {derivative(p_coeffs_pi, j, width), derivative(q_coeffs_pi, j, width)};
}

SplicePolynomials build_splice(double t_reduced, int d, int N, const SpliceOptions& options) {
  if (N < 2 || N % 2 != 0) throw DomainError("grid parameter N must be a positive even integer");
  if (!(t_reduced >= N && t_reduced < N + 1.0)) {
    throw DomainError("reduced time " + std::to_string(t_reduced) + " outside [N, N+1)");
  }
  if (d < 1) throw DomainError("smoothness order d must be >= 1");

  SplicePolynomials sp;
  sp.t_reduced = t_reduced;
  sp.d = d;
  sp.N = N;
  sp.pin_q_slope_at_pi = options.pin_q_slope_at_pi;
  const bool empty_interval = t_reduced == static_cast<double>(N);
  sp.g = empty_interval ? kPi : kPi * N / t_reduced;
  sp.width = empty_interval ? 1.0 : kPi - sp.g;

  Constraints p_cs;
  Constraints q_cs;
  for (int j = 0; j < d; ++j) {
    const std::complex<double> z = i_power(t_reduced, j) * std::pow(sp.width, j);
    p_cs.seam.push_back(z.real());
    q_cs.seam.push_back(z.imag());
  }

  if (!empty_interval) {
    for (int j = 0; j < d; ++j) {
      (j % 2 == 0 ? q_cs : p_cs).at_pi.push_back(j);
    }
    if (options.pin_q_slope_at_pi && d >= 2) q_cs.at_pi.push_back(1);
  }
  // With g = pi the interval is empty; the Taylor polynomial of the
  // exponential already satisfies the periodicity orders.

  sp.p_coeffs = expand_at_seam(p_cs);
  sp.q_coeffs = expand_at_seam(q_cs);
  if (empty_interval) {
    sp.p_coeffs_pi = sp.p_coeffs;
    sp.q_coeffs_pi = sp.q_coeffs;
  } else {
    sp.p_coeffs_pi = expand_at_pi(p_cs);
    sp.q_coeffs_pi = expand_at_pi(q_cs);
  }
  return sp;
}

std::complex<double> eval_extension(const SplicePolynomials& splice, long m, double omega) {
  if (!(std::abs(omega) <= kPi)) {
    throw DomainError("frequency " + std::to_string(omega) + " outside [-pi, pi]");
  }
  const std::complex<double> shift = std::polar(1.0, omega * static_cast<double>(m));
  if (std::abs(omega) <= splice.g) {
    return std::polar(1.0, omega * splice.t_reduced) * shift;
  }
  if (omega > 0.0) return splice.value(omega) * shift;
  return std::conj(splice.value(-omega)) * shift;
}

std::vector<double> seam_residuals(const SplicePolynomials& splice) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * splice.d + 1));
  for (int j = 0; j < splice.d; ++j) {
    out.push_back(std::abs(splice.derivative_at_seam(j) - i_power(splice.t_reduced, j)));
  }
  for (int j = 0; j < splice.d; ++j) {
    // E^(j)(-pi) = (-1)^j conj(E^(j)(pi)) under the reflection rule.
    const std::complex<double> right = splice.derivative_at_pi(j);
    const std::complex<double> left = (j % 2 == 0 ? 1.0 : -1.0) * std::conj(right);
    out.push_back(std::abs(right - left));
  }
  double agreement = 0.0;
  constexpr int kProbes = 16;
  // A degenerate splice holds one expansion twice at the same point.
  for (int i = 0; i <= (splice.degenerate() ? -1 : kProbes); ++i) {
    const double s = static_cast<double>(i) / kProbes;
    const std::complex<double> near_seam{horner(splice.p_coeffs, s), horner(splice.q_coeffs, s)};
    const std::complex<double> near_pi{horner(splice.p_coeffs_pi, s - 1.0),
                                       horner(splice.q_coeffs_pi, s - 1.0)};
    agreement = std::max(agreement, std::abs(near_seam - near_pi));
  }
  out.push_back(agreement);
  return out;
}

void write_splice_csv(std::ostream& out, const SplicePolynomials& splice) {
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "kind,index,value\n";
  out << "t_reduced,0," << num(splice.t_reduced) << '\n';
  out << "g,0," << num(splice.g) << '\n';
  out << "width,0," << num(splice.width) << '\n';
  out << "d,0," << splice.d << '\n';
  auto dump = [&](const char* kind, const std::vector<double>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) out << kind << ',' << i << ',' << num(c[i]) << '\n';
  };
  dump("p", splice.p_coeffs);
  dump("q", splice.q_coeffs);
  dump("p_pi", splice.p_coeffs_pi);
  dump("q_pi", splice.q_coeffs_pi);
  const std::vector<double> res = seam_residuals(splice);
  for (std::size_t i = 0; i < res.size(); ++i) out << "residual," << i << ',' << num(res[i]) << '\n';
}

}  // namespace bandlim
