#include <gtest/gtest.h>

#include <algorithm>

#include "itofrft/error.hpp"
#include "itofrft/ito_hermite.hpp"
#include "itofrft/specfun.hpp"
#include "oracles.hpp"

using namespace itofrft;
using oracle::cd;

TEST(HermiteIto, LowOrderClosedForms) {
  for (double nu : {0.5, 1.0, 2.0})
    for (cd z : {cd(5.0, 0.0), cd(0.3, -1.2), cd(0.0, 0.0)}) {
      EXPECT_EQ(hermite_ito({nu, z}, {0, 0}), cd(1.0));
      EXPECT_NEAR(std::abs(hermite_ito({nu, z}, {1, 0}) - nu * z), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(hermite_ito({nu, z}, {0, 1}) - nu * std::conj(z)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(hermite_ito({nu, z}, {1, 1}) - (nu * nu * std::norm(z) - nu)), 0.0, 1e-13);
    }
}

TEST(HermiteIto, MatchesFiniteSum) {
  auto g = oracle::rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const double nu = std::uniform_real_distribution<double>(0.3, 2.5)(g);
    const int m = std::uniform_int_distribution<int>(0, 7)(g);
    const int n = std::uniform_int_distribution<int>(0, 7)(g);
    const cd z = oracle::random_in_disk(g, 2.0);
    const cd want = oracle::hermite_ito_sum(nu, m, n, z);
    const double scale = oracle::hermite_ito_scale(nu, m, n, std::abs(z));
    EXPECT_LE(std::abs(hermite_ito({nu, z}, {m, n}) - want), 1e-12 * std::max(scale, 1e-300))
        << "m=" << m << " n=" << n << " z=" << z;
  }
}

TEST(HermiteIto, ConjugateSymmetry) {
  auto g = oracle::rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = std::uniform_int_distribution<int>(0, 10)(g);
    const int n = std::uniform_int_distribution<int>(0, 10)(g);
    const cd z = oracle::random_in_disk(g, 1.8);
    const ScaledPoint p{1.3, z};
    const double scale = oracle::hermite_ito_scale(1.3, m, n, std::abs(z));
    EXPECT_LE(std::abs(hermite_ito(p, {m, n}) - std::conj(hermite_ito(p, {n, m}))), 1e-12 * scale);
  }
}

TEST(HermiteIto, LaguerreFactorization) {
  for (double nu : {0.5, 1.0, 2.0})
    for (int m = 0; m <= 8; ++m)
      for (int n = 0; n <= m; ++n)
        for (cd z : {cd(0.4, 0.1), cd(-1.1, 0.7), cd(0.0, 1.6)}) {
          const cd want = std::pow(-1.0, n) * std::tgamma(n + 1.0) * std::pow(nu, m) * oracle::cpow(z, m - n) *
                          specfun::laguerre(n, RealOrder(m - n), nu * std::norm(z));
          const double scale = oracle::hermite_ito_scale(nu, m, n, std::abs(z));
          EXPECT_LE(std::abs(hermite_ito({nu, z}, {m, n}) - want), 1e-11 * scale);
        }
}

TEST(Psi, NormalizationAgainstFiniteSum) {
  for (double nu : {0.5, 1.0, 2.0})
    for (int m = 0; m <= 9; ++m)
      for (int n = 0; n <= 9; ++n) {
        const cd z(0.7, -0.4);
        const cd want = oracle::psi_sum(nu, m, n, z);
        EXPECT_LE(std::abs(psi({nu, z}, {m, n}) - want), 1e-12 * std::max(1.0, std::abs(want)));
      }
}

TEST(Psi, ConstantTerm) {
  EXPECT_NEAR(psi({2.0, cd(3.0, 1.0)}, {0, 0}).real(), std::sqrt(2.0 / oracle::pi), 1e-15);
}

TEST(Psi, FiniteAtDegreeCap) {
  const cd v = psi({1.0, cd(3.0, 2.0)}, {kDegreeCap, kDegreeCap});
  EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
  // |psi_{m,n}(z)|^2 summed over all indices is (nu/pi) e^{nu|z|^2}.
  EXPECT_LT(std::abs(v), std::sqrt(1.0 / oracle::pi) * std::exp(0.5 * 13.0));
}

TEST(PsiGrid, MatchesPointwise) {
  const std::vector<cd> pts = {cd(0.1, 0.2), cd(-1.0, 0.5), cd(2.0, -0.3), cd(0.0, 0.0), cd(0.6, 0.6)};
  const PsiGrid grid(1.5, pts, 6, 4);
  EXPECT_EQ(grid.num_points(), pts.size());
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 4; ++n)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const cd want = psi({1.5, pts[i]}, {m, n});
        EXPECT_LE(std::abs(grid.at({m, n}, i) - want), 1e-14 * std::max(1.0, std::abs(want)));
      }
  EXPECT_THROW(grid.values({7, 0}), IndexCapError);
}

TEST(ZeroRadii, UnitCircleForH11) {
  const ZeroSet zs = zero_radii(1.0, {1, 1});
  ASSERT_EQ(zs.radii.size(), 1u);
  EXPECT_NEAR(zs.radii[0], 1.0, 1e-15);
  EXPECT_FALSE(zs.includes_origin);
}

TEST(ZeroRadii, OriginOnlyWhenIndicesDiffer) {
  const ZeroSet zs = zero_radii(1.0, {2, 0});
  EXPECT_TRUE(zs.radii.empty());
  EXPECT_TRUE(zs.includes_origin);
  EXPECT_TRUE(zero_radii(1.0, {3, 1}).includes_origin);
  EXPECT_FALSE(zero_radii(1.0, {0, 0}).includes_origin);
}

TEST(ZeroRadii, CountScalingAndVanishing) {
  for (int m = 0; m <= 9; ++m)
    for (int n = 0; n <= 9; ++n) {
      const ZeroSet a = zero_radii(1.0, {m, n});
      const ZeroSet b = zero_radii(4.0, {m, n});
      ASSERT_EQ(a.radii.size(), static_cast<std::size_t>(std::min(m, n)));
      EXPECT_TRUE(std::is_sorted(a.radii.begin(), a.radii.end()));
      for (std::size_t j = 0; j < a.radii.size(); ++j) {
        EXPECT_NEAR(b.radii[j], 0.5 * a.radii[j], 1e-13 * a.radii[j]);  // r ~ nu^{-1/2}
        for (int k = 0; k < 8; ++k) {
          const cd z = std::polar(a.radii[j], 2 * oracle::pi * k / 8);
          EXPECT_LE(std::abs(hermite_ito({1.0, z}, {m, n})), 1e-9 * oracle::hermite_ito_scale(1.0, m, n, a.radii[j]));
        }
      }
    }
}

TEST(NullIndexSet, UnitCircle) {
  const auto idx = null_index_set(1.0, cd(1.0, 0.0), 5, 5, 1e-10);
  ASSERT_EQ(idx.size(), 1u);
  EXPECT_EQ(idx[0], (PolyIndex{1, 1}));
  // rotation invariance: only |w| matters
  EXPECT_EQ(null_index_set(1.0, std::polar(1.0, 0.9), 5, 5, 1e-10), idx);
}

TEST(NullIndexSet, OriginKillsOffDiagonal) {
  const auto idx = null_index_set(1.0, cd(0.0, 0.0), 4, 4, 1e-12);
  EXPECT_EQ(idx.size(), 20u);
  for (auto i : idx) EXPECT_NE(i.m, i.n);
}

TEST(CheckIndex, Bounds) {
  EXPECT_NO_THROW(check_index({kDegreeCap, 0}));
  EXPECT_THROW(check_index({kDegreeCap + 1, 0}), IndexCapError);
  EXPECT_THROW(check_index({0, -1}), DomainError);
  EXPECT_THROW(hermite_ito({1.0, 0.5}, {-1, 0}), DomainError);
  EXPECT_THROW(psi({0.0, 0.5}, {0, 0}), DomainError);
}

// High degrees inside the oscillatory region, where the finite sum cancels by
// dozens of orders of magnitude. Diagonal entries reduce to Laguerre
// polynomials: psi_{n,n} = sqrt(nu/pi) (-1)^n L_n(nu|z|^2).
TEST(Psi, StableAtHighDegree) {
  const double nu = 1.0;
  for (int n : {60, 120, 200})
    for (double r2 : {3.0, 13.0, 40.0}) {
      const cd z = std::polar(std::sqrt(r2), 0.7);
      const double want = std::sqrt(nu / oracle::pi) * (n % 2 ? -1.0 : 1.0) * std::assoc_laguerre(n, 0, nu * r2);
      EXPECT_NEAR(psi({nu, z}, {n, n}).real(), want, 1e-10 * std::exp(0.5 * nu * r2)) << n << " " << r2;
    }
  // Off-diagonal: psi_{n+k,n} = sqrt(nu/pi) (-1)^n sqrt(n!/(n+k)!) (sqrt(nu) z)^k L_n^{(k)}(nu|z|^2)
  const cd z(1.1, -2.3);
  for (auto [n, k] : {std::pair{150, 3}, {40, 17}}) {
    const double x = nu * std::norm(z);
    const double mag = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)) + 0.5 * k * std::log(x));
    const cd phase = std::polar(1.0, k * std::arg(z));
    const cd want = std::sqrt(nu / oracle::pi) * (n % 2 ? -1.0 : 1.0) * mag * phase * std::assoc_laguerre(n, k, x);
    EXPECT_LT(std::abs(psi({nu, z}, {n + k, n}) - want), 1e-10 * std::exp(0.5 * x));
    EXPECT_LT(std::abs(psi({nu, z}, {n, n + k}) - std::conj(want)), 1e-10 * std::exp(0.5 * x));
  }
  const std::vector<cd> pts = {cd(2.0, 3.0), cd(-0.5, 1.0)};
  const PsiGrid grid(nu, pts, 200, 200);
  for (std::size_t i = 0; i < pts.size(); ++i)
    EXPECT_LT(std::abs(grid.at({200, 197}, i) - psi({nu, pts[i]}, {200, 197})),
              1e-12 * std::exp(0.5 * std::norm(pts[i])));
}
