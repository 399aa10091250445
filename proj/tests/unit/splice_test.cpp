#include <bandlim/errors.hpp>
#include <bandlim/splice.hpp>
#include <bandlim/grid.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace bandlim {
namespace {

TEST(Splice, FirstOrderIsConstantOne) {
  const SplicePolynomials s = build_splice(6.29, 1, 6);
  for (double w = s.g; w <= kPi; w += (kPi - s.g) / 16) {
    EXPECT_NEAR(s.value(w).real(), 1.0, 1e-15);
    EXPECT_NEAR(s.value(w).imag(), 0.0, 1e-15);
  }
}

TEST(Splice, SecondOrderMatchesClosedForm) {
  const double tr = 6.29;
  const SplicePolynomials s = build_splice(tr, 2, 6);
  const double g = 6.0 * kPi / tr;
  EXPECT_NEAR(s.g, g, 1e-15);
  for (int i = 0; i <= 20; ++i) {
    const double w = g + (kPi - g) * i / 20.0;
    const double q = tr * (w - g) * (w - kPi) / (g - kPi);
    EXPECT_NEAR(s.value(w).real(), 1.0, 1e-13) << w;
    EXPECT_NEAR(s.value(w).imag(), q, 1e-13) << w;
  }
}

TEST(Splice, MatchesExponentialDerivativesAtSeam) {
  for (int d = 1; d <= 6; ++d) {
    for (const double tr : {6.0001, 6.29, 6.5, 6.999}) {
      const SplicePolynomials s = build_splice(tr, d, 6);
      std::complex<double> want{1.0, 0.0};
      for (int j = 0; j < d; ++j) {
        const double scale = std::max(1.0, std::abs(want));
        EXPECT_LT(std::abs(s.derivative_at_seam(j) - want) / scale, 1e-12) << d << ' ' << tr << ' ' << j;
        want *= std::complex<double>(0.0, tr);
      }
    }
  }
}

TEST(Splice, PeriodicDerivativesAtPi) {
  for (int d = 1; d <= 6; ++d) {
    const SplicePolynomials s = build_splice(6.4, d, 6);
    for (int j = 0; j < d; ++j) {
      const std::complex<double> v = s.derivative_at_pi(j);
      if (j % 2 == 0) {
        EXPECT_NEAR(v.imag(), 0.0, 1e-9) << d << ' ' << j;
      } else {
        EXPECT_NEAR(v.real(), 0.0, 1e-9) << d << ' ' << j;
      }
    }
  }
}

TEST(Splice, ResidualsBelowToleranceOverTauGrid) {
  double worst = 0.0;
  for (int d = 1; d <= 6; ++d) {
    for (int i = 0; i < 100; ++i) {
      const double tr = 6.0 + i / 100.0;
      for (const double r : seam_residuals(build_splice(tr, d, 6))) worst = std::max(worst, r);
    }
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Splice, CoefficientsStayBounded) {
  for (const int d : {2, 3, 4}) {
    double biggest = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const SplicePolynomials s = build_splice(6.0 + i / 1000.0, d, 6);
      for (int k = 0; k < 256; ++k) {
        const double w = s.g + (kPi - s.g) * k / 255.0;
        biggest = std::max(biggest, std::abs(s.value(w)));
      }
    }
    EXPECT_TRUE(std::isfinite(biggest));
    EXPECT_LT(biggest, 10.0) << d;
  }
}

TEST(Splice, DegenerateAtIntegerTime) {
  const SplicePolynomials s = build_splice(6.0, 3, 6);
  EXPECT_TRUE(s.degenerate());
  EXPECT_EQ(s.g, kPi);
  for (const double r : seam_residuals(s)) EXPECT_LT(r, 1e-12);
}

TEST(Splice, PinOptionFlattensQAtPi) {
  SpliceOptions pinned;
  pinned.pin_q_slope_at_pi = true;
  const SplicePolynomials s = build_splice(6.3, 3, 6, pinned);
  EXPECT_TRUE(s.pin_q_slope_at_pi);
  EXPECT_NEAR(s.derivative_at_pi(1).imag(), 0.0, 1e-10);
  for (const double r : seam_residuals(s)) EXPECT_LT(r, 1e-9);
  EXPECT_GT(std::abs(build_splice(6.3, 3, 6).derivative_at_pi(1).imag()), 1e-6);
}

TEST(Splice, CorruptionIsDetected) {
  SplicePolynomials s = build_splice(6.3, 3, 6);
  s.q_coeffs.back() += 1e-3;
  const auto r = seam_residuals(s);
  EXPECT_GT(*std::max_element(r.begin(), r.end()), 1e-9);
}

TEST(Extension, CoreBandIsExponential) {
  const GridPosition pos = locate(-1.71, 6);
  const SplicePolynomials s = build_splice(pos.t_reduced, 2, 6);
  for (const double w : {0.0, 0.3, -2.0, 0.9 * kPi, -0.9 * kPi}) {
    const std::complex<double> want = std::polar(1.0, w * -1.71);
    EXPECT_LT(std::abs(eval_extension(s, pos.m, w) - want), 1e-13) << w;
  }
}

TEST(Extension, SpliceBandUsesPolynomial) {
  const GridPosition pos = locate(-1.71, 6);
  const SplicePolynomials s = build_splice(pos.t_reduced, 2, 6);
  const double w = 0.98 * kPi;
  ASSERT_GT(w, pos.g);
  const std::complex<double> want = s.value(w) * std::polar(1.0, w * pos.m);
  EXPECT_LT(std::abs(eval_extension(s, pos.m, w) - want), 1e-14);
  EXPECT_GT(std::abs(want - std::polar(1.0, w * -1.71)), 1e-3);
}

TEST(Extension, ConjugateSymmetric) {
  const SplicePolynomials s = build_splice(6.55, 4, 6);
  for (const double w : {0.1, 1.0, 2.9, 3.0, 3.1, kPi}) {
    EXPECT_LT(std::abs(eval_extension(s, -3, -w) - std::conj(eval_extension(s, -3, w))), 1e-14);
  }
}

TEST(Extension, PeriodicAtPi) {
  const SplicePolynomials s = build_splice(6.55, 4, 6);
  EXPECT_LT(std::abs(eval_extension(s, 5, kPi) - eval_extension(s, 5, -kPi)), 1e-12);
}

TEST(Extension, RejectsFrequencyOutsideBand) {
  const SplicePolynomials s = build_splice(6.5, 2, 6);
  EXPECT_THROW(eval_extension(s, 0, 3.2), DomainError);
  EXPECT_THROW(eval_extension(s, 0, -3.2), DomainError);
}

TEST(Splice, RejectsBadArguments) {
  EXPECT_THROW(build_splice(7.0, 2, 6), DomainError);
  EXPECT_THROW(build_splice(5.9, 2, 6), DomainError);
  EXPECT_THROW(build_splice(6.5, 0, 6), DomainError);
}

TEST(Splice, CsvDumpListsCoefficientsAndResiduals) {
  std::ostringstream out;
  write_splice_csv(out, build_splice(6.29, 2, 6));
  const std::string text = out.str();
  EXPECT_NE(text.find("\nq_pi,"), std::string::npos) << text;
  EXPECT_NE(text.find("residual"), std::string::npos) << text;
}

}  // namespace
}  // namespace bandlim
