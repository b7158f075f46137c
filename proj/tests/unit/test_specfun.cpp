#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "itofrft/error.hpp"
#include "itofrft/specfun.hpp"
#include "oracles.hpp"

using namespace itofrft;
using specfun::bessel_i;
using specfun::hermite_real;
using specfun::laguerre;
using specfun::log_gamma;

TEST(LogGamma, MatchesStdLgamma) {
  // Relative error is meaningless at the roots x = 1, 2, so use a mixed
  // absolute/relative criterion.
  for (double x = 0.01; x < 171.0; x *= 1.07) {
    const double want = std::lgamma(x);
    EXPECT_LE(std::abs(log_gamma(x) - want), 1e-13 * std::max(std::abs(want), 1.0)) << "x=" << x;
  }
}

TEST(LogGamma, ExactAtOneAndTwo) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
}

TEST(LogGamma, KnownValues) {
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(oracle::pi), 1e-14);
  EXPECT_NEAR(log_gamma(10.0), std::log(362880.0), 1e-13);
}

TEST(LogGamma, RecurrenceProperty) {
  auto g = oracle::rng(1);
  std::uniform_real_distribution<double> d(0.05, 60.0);
  for (int i = 0; i < 500; ++i) {
    const double x = d(g);
    EXPECT_NEAR(log_gamma(x + 1.0) - log_gamma(x), std::log(x), 1e-12 * std::max(1.0, std::abs(log_gamma(x))));
  }
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(RealOrder, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(RealOrder(-0.1), DomainError);
  EXPECT_THROW(RealOrder(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_EQ(RealOrder(2.5).value(), 2.5);
}

TEST(BesselI, MatchesStdCylBesselI) {
  for (double a : {0.0, 0.5, 1.0, 2.5, 7.0, 20.0})
    for (double x : {1e-3, 0.1, 0.9, 2.0, 5.5, 12.0, 25.0, 40.0}) {
      const double want = std::cyl_bessel_i(a, x);
      EXPECT_NEAR(bessel_i(RealOrder(a), x), want, 1e-13 * want) << "a=" << a << " x=" << x;
    }
}

TEST(BesselI, ValueAtZero) {
  EXPECT_EQ(bessel_i(RealOrder(0.0), 0.0), 1.0);
  EXPECT_EQ(bessel_i(RealOrder(1.0), 0.0), 0.0);
  EXPECT_EQ(bessel_i(RealOrder(0.5), 0.0), 0.0);
}

TEST(BesselI, PositiveAndIncreasing) {
  for (double a : {0.0, 0.3, 1.0, 4.0}) {
    double prev = bessel_i(RealOrder(a), 0.0);
    for (double x = 0.1; x <= 30.0; x += 0.1) {
      const double v = bessel_i(RealOrder(a), x);
      EXPECT_GT(v, 0.0);
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(BesselI, HalfOrderClosedForm) {
  // I_{1/2}(x) = sqrt(2 / (pi x)) sinh x
  for (double x : {0.2, 1.0, 3.0, 10.0}) {
    EXPECT_NEAR(bessel_i(RealOrder(0.5), x), std::sqrt(2.0 / (oracle::pi * x)) * std::sinh(x),
                1e-14 * std::sinh(x));
  }
}

TEST(Laguerre, MatchesExplicitCoefficients) {
  for (double a : {0.0, 0.5, 2.0, 3.7})
    for (int n = 0; n <= 8; ++n)
      for (double x : {0.0, 0.3, 1.0, 2.5, 6.0}) {
        const double want = oracle::laguerre_sum(n, a, x);
        EXPECT_NEAR(laguerre(n, RealOrder(a), x), want, 1e-12 * std::max(1.0, std::abs(want)));
      }
}

TEST(Laguerre, MatchesStdAssocLaguerre) {
  for (unsigned n = 0; n <= 30; n += 3)
    for (unsigned a = 0; a <= 6; a += 2)
      for (double x : {0.1, 1.7, 9.0}) {
        const double want = std::assoc_laguerre(n, a, x);
        EXPECT_NEAR(laguerre(n, RealOrder(a), x), want, 1e-11 * std::max(1.0, std::abs(want)));
      }
}

TEST(Laguerre, DegreeCap) {
  EXPECT_NO_THROW(laguerre(kDegreeCap, RealOrder(0.0), 1.0));
  EXPECT_THROW(laguerre(kDegreeCap + 1, RealOrder(0.0), 1.0), IndexCapError);
  EXPECT_THROW(laguerre(-1, RealOrder(0.0), 1.0), DomainError);
}

TEST(HermiteReal, MatchesStdHermite) {
  for (unsigned n = 0; n <= 30; ++n)
    for (double x : {-2.5, -0.4, 0.0, 0.9, 3.0}) {
      const double want = std::hermite(n, x);
      EXPECT_NEAR(hermite_real(n, x), want, 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST(HermiteReal, LowDegrees) {
  EXPECT_EQ(hermite_real(0, 0.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite_real(1, 0.7), 1.4);
  EXPECT_NEAR(hermite_real(2, 0.7), 4 * 0.49 - 2, 1e-15);
  EXPECT_THROW(hermite_real(kDegreeCap + 1, 0.0), IndexCapError);
}

namespace {

double mehler_closed(double t, double x, double y) {
  return std::exp((2 * t * x * y - t * t * (x * x + y * y)) / (1 - t * t)) / std::sqrt(1 - t * t);
}

}  // namespace

// In double precision the series is well conditioned when x and y have the
// same sign or are small.
TEST(HermiteReal, ClassicalMehlerDoublePrecision) {
  for (double t : {0.1, 0.3, 0.5})
    for (double x : {-1.0, 0.0, 0.5, 1.5})
      for (double y : {0.0, 0.5, 1.5}) {
        if (x * y < 0) continue;
        double s = 0, tn = 1, denom = 1;
        for (int n = 0; n <= 80; ++n) {
          if (n > 0) tn *= t, denom *= 2.0 * n;
          s += tn * hermite_real(n, x) * hermite_real(n, y) / denom;
        }
        EXPECT_NEAR(s, mehler_closed(t, x, y), 1e-12 * mehler_closed(t, x, y));
      }
}

// Over the full [-3, 3]^2 grid the series loses up to ten digits to
// cancellation, so the recurrence is run in long double / binary128.
TEST(HermiteReal, ClassicalMehlerExtendedPrecision) {
#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
  using Wide = __float128;
#else
  using Wide = long double;
#endif
  double worst = 0;
  for (double t : {0.1, 0.3, 0.5})
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const double x = -3 + 0.3 * i, y = -3 + 0.3 * j;
        Wide s = 0, tn = 1, denom = 1;
        for (int n = 0; n <= 80; ++n) {
          if (n > 0) tn *= Wide(t), denom *= Wide(2 * n);
          s += tn * specfun::hermite_real_t<Wide>(n, Wide(x)) * specfun::hermite_real_t<Wide>(n, Wide(y)) / denom;
        }
        const double want = mehler_closed(t, x, y);
        worst = std::max(worst, std::abs(static_cast<double>(s) - want) / want);
      }
  EXPECT_LT(worst, 1e-9);
}
