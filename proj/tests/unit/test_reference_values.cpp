// Small hand-checkable values for every public operation.
#include <gtest/gtest.h>

#include "itofrft/bergman.hpp"
#include "itofrft/ito_hermite.hpp"
#include "itofrft/kernels.hpp"
#include "itofrft/quadrature.hpp"
#include "itofrft/specfun.hpp"
#include "itofrft/spectral.hpp"
#include "itofrft/transforms.hpp"
#include "oracles.hpp"

using namespace itofrft;
using oracle::cd;
using oracle::pi;

TEST(ReferenceValues, SpecialFunctions) {
  using namespace specfun;
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
  EXPECT_NEAR(log_gamma(2.5), std::log(1.3293403881791370), 1e-14);
  EXPECT_EQ(bessel_i(RealOrder(0.0), 0.0), 1.0);
  EXPECT_EQ(bessel_i(RealOrder(1.0), 0.0), 0.0);
  EXPECT_NEAR(bessel_i(RealOrder(0.0), 1.0), 1.2660658777520082, 1e-15);
  EXPECT_EQ(laguerre(0, RealOrder(2.5), -3.0), 1.0);
  EXPECT_NEAR(laguerre(1, RealOrder(0.0), 2.0), -1.0, 1e-15);
  EXPECT_NEAR(laguerre(2, RealOrder(1.0), 0.0), 3.0, 1e-15);
  EXPECT_EQ(hermite_real(0, 7.0), 1.0);
  EXPECT_EQ(hermite_real(1, 3.0), 6.0);
  EXPECT_NEAR(hermite_real(3, 1.0), -4.0, 1e-14);
}

TEST(ReferenceValues, ItoHermite) {
  EXPECT_EQ(hermite_ito({1.0, cd(2.0, 3.0)}, {0, 0}), cd(1.0));
  EXPECT_LT(std::abs(hermite_ito({2.0, cd(1.0, 1.0)}, {1, 0}) - cd(2.0, 2.0)), 1e-15);
  EXPECT_LT(std::abs(hermite_ito({1.0, 1.0}, {1, 1})), 1e-15);
  EXPECT_NEAR(psi({1.0, cd(4.0, -1.0)}, {0, 0}).real(), std::sqrt(1.0 / pi), 1e-15);
  EXPECT_LT(std::abs(psi({1.0, 1.0}, {1, 1})), 1e-15);
  EXPECT_NEAR(psi({pi, cd(0.3, 0.3)}, {0, 0}).real(), 1.0, 1e-15);

  const ZeroSet h11 = zero_radii(1.0, {1, 1});
  ASSERT_EQ(h11.radii.size(), 1u);
  EXPECT_NEAR(h11.radii[0], 1.0, 1e-14);
  EXPECT_FALSE(h11.includes_origin);
  const ZeroSet h10 = zero_radii(4.0, {1, 0});
  EXPECT_TRUE(h10.radii.empty());
  EXPECT_TRUE(h10.includes_origin);

  const auto far = null_index_set(1.0, 2.0, 4, 4, 1e-10);
  EXPECT_EQ(std::count(far.begin(), far.end(), PolyIndex{0, 0}), 0);
  const auto circle = null_index_set(1.0, 1.0, 2, 2, 1e-10);
  EXPECT_EQ(std::count(circle.begin(), circle.end(), PolyIndex{1, 1}), 1);
  const auto origin = null_index_set(1.0, 0.0, 3, 3, 1e-10);
  EXPECT_EQ(origin.size(), 12u);
  for (auto idx : origin) EXPECT_NE(idx.m, idx.n);
}

TEST(ReferenceValues, Quadrature) {
  const PlaneRule p = plane_rule(1.0, 20, 8);
  const std::function<cd(const cd&)> one = [](const cd&) { return cd(1.0); };
  EXPECT_NEAR(integrate(p, one).real(), pi, 1e-13 * pi);
  const std::function<cd(const cd&)> r2 = [](const cd& z) { return cd(std::norm(z)); };
  EXPECT_NEAR(integrate(p, r2).real(), pi, 1e-13 * pi);
  const std::function<cd(const cd&)> lin = [](const cd& z) { return z; };
  EXPECT_LT(std::abs(integrate(p, lin)), 1e-14);
  const PlaneRule big = plane_rule(1.0, 64, 64);
  const std::function<cd(const cd&)> psi23 = [](const cd& z) { return cd(std::norm(psi({1.0, z}, {2, 3}))); };
  EXPECT_NEAR(integrate(big, psi23).real(), 1.0, 1e-13);

  const std::function<cd(const BidiskPoint&)> bone = [](const BidiskPoint&) { return cd(1.0); };
  EXPECT_NEAR(integrate(bidisk_rule(0.0, 0.0, 8, 8), bone).real(), pi * pi, 1e-13);
  EXPECT_NEAR(integrate(bidisk_rule(1.0, 1.0, 8, 8), bone).real(), pi * pi / 4, 1e-13);
  const std::function<cd(const BidiskPoint&)> uvbar = [](const BidiskPoint& x) { return x.u * std::conj(x.v); };
  EXPECT_LT(std::abs(integrate(bidisk_rule(0.5, 2.0, 8, 8), uvbar)), 1e-15);
  const std::function<cd(const BidiskPoint&)> e10 = [](const BidiskPoint& x) { return cd(std::norm(x.u)); };
  EXPECT_NEAR(integrate(bidisk_rule(0.0, 0.0, 8, 8), e10).real(), pi * pi / 2, 1e-13);

  const std::function<cd(const QuadrantPoint&)> qone = [](const QuadrantPoint&) { return cd(1.0); };
  EXPECT_NEAR(integrate(quadrant_rule(0.0, 0.0, 16), qone).real(), 1.0, 1e-14);
  const std::function<cd(const QuadrantPoint&)> s = [](const QuadrantPoint& q) { return cd(q.s); };
  EXPECT_NEAR(integrate(quadrant_rule(0.0, 0.0, 16), s).real(), 1.0, 1e-14);
  const std::function<cd(const QuadrantPoint&)> s2 = [](const QuadrantPoint& q) { return cd(q.s * q.s); };
  EXPECT_NEAR(integrate(quadrant_rule(1.0, 0.0, 16), s2).real(), 6.0, 1e-13);
}

TEST(ReferenceValues, Kernels) {
  EXPECT_NEAR(bergman_kernel(1.0, 1.0, {0.0, 0.0}, {0.0, 0.0}).real(), 4.0 / (pi * pi), 1e-15);
  const TransformParams p(1.0, 0.3, 0.3);
  const cd closed = mehler_closed(p, 1.0, 1.0) / pi;
  EXPECT_LT(std::abs(mehler_series(p, 1.0, 1.0, 60) - closed), 1e-12 * std::abs(closed));
}

TEST(ReferenceValues, Transforms) {
  const double nu = 1.0;
  const PlaneRule rule = plane_rule(nu, 64, 64);
  // u = v = 0 keeps only the constant mode.
  const TransformParams zero(nu, 0.0, 0.0);
  EXPECT_NEAR(frft_apply(zero, CoeffFunction::basis(nu, {0, 0}), cd(0.7, 0.2), rule).real(), std::sqrt(nu / pi),
              1e-14);
  // The constant 1 is (pi/nu)^{1/2} psi_{0,0}, eigenvalue 1.
  const PlaneFunction constant = [](cd) { return cd(1.0); };
  for (cd xi : {cd(0.0), cd(1.5, -0.5)})
    EXPECT_LT(std::abs(frft_apply(TransformParams(nu, cd(0.3, 0.2), -0.6), constant, xi, rule) - 1.0), 1e-12);

  const cd on_circle = std::polar(1.0, 0.9);
  const CoeffFunction f11 = CoeffFunction::basis(nu, {1, 1});
  for (BidiskPoint uv : {BidiskPoint{0.5, 0.5}, BidiskPoint{cd(-0.2, 0.7), cd(0.1, -0.3)}})
    EXPECT_LT(std::abs(dual_apply(nu, on_circle, f11, uv, rule)), 1e-13);
  const cd w(0.4, -0.3);
  const BidiskPoint uv{cd(0.2, 0.5), -0.6};
  EXPECT_LT(std::abs(dual_apply_coeff(nu, w, CoeffFunction::basis(nu, {2, 1}), uv) -
                     oracle::psi_sum(nu, 2, 1, w) * uv.u * uv.u * uv.v),
            1e-15);

  EXPECT_NEAR(bergman_norm({{{0, 0}, 1.0}}, BergmanParams(0.0, 0.0)), pi, 1e-14);
  EXPECT_EQ(bergman_norm({}, BergmanParams(1.0, 1.0)), 0.0);
  const BergmanParams bp(1.0, 2.0);
  EXPECT_NEAR(bergman_norm(dual_image(w, CoeffFunction::basis(nu, {3, 2})), bp), singular_value(nu, bp, {3, 2}, w),
              1e-15);

  const BidiskRule brule = bidisk_rule(1.0, 1.0, 3, 128);
  const BidiskFunction g0 = [](const BidiskPoint&) { return cd(0.0); };
  EXPECT_EQ(adjoint_apply(nu, w, 1.0, 1.0, g0, cd(0.5, 0.5), brule), cd(0.0));
  // R* R psi_{m,n} = s_{m,n}^2 psi_{m,n}: R psi_{1,2} = psi_{1,2}(w) u v^2.
  const BidiskFunction rpsi = [&](const BidiskPoint& x) { return psi({nu, w}, {1, 2}) * x.u * x.v * x.v; };
  const double s2 = std::pow(singular_value(nu, BergmanParams(1.0, 1.0), {1, 2}, w), 2);
  for (cd z : {cd(0.3, 0.1), cd(-1.0, 0.8)})
    EXPECT_LT(std::abs(adjoint_apply(nu, w, 1.0, 1.0, rpsi, z, brule) - s2 * psi({nu, z}, {1, 2})), 1e-13);
}

TEST(ReferenceValues, HankelAndModes) {
  const double nu = 1.0, u = 0.4, v = 0.3;
  const auto zero = RadialFunction::from_callable([](double) { return cd(0.0); });
  EXPECT_EQ(hankel_apply(nu, RealOrder(0.0), u, v, zero, 1.0), cd(0.0));
  const PlaneRule rule = plane_rule(nu, 64, 64);
  const TransformParams p(nu, u, v);
  // Radial Gaussian, k = 0 and k = 2, against the full-plane transform.
  const auto gauss = RadialFunction::from_callable([](double r) { return cd(std::exp(-r * r)); });
  const PlaneFunction radial = [](cd z) { return cd(std::exp(-std::norm(z))); };
  const PlaneFunction mode2 = [](cd z) {
    return std::norm(z) == 0.0 ? cd(0.0) : std::exp(-std::norm(z)) * z * z / std::norm(z);
  };
  for (double y : {0.3, 1.2}) {
    EXPECT_LT(std::abs(hankel_apply(nu, RealOrder(0.0), u, v, gauss, y) - frft_apply(p, radial, y, rule)), 1e-7);
    EXPECT_EQ(rotational_frft(nu, u, v, 0, gauss, y), hankel_apply(nu, RealOrder(0.0), u, v, gauss, y));
  }
  const auto gauss_r = RadialFunction::from_callable([](double r) { return cd(std::exp(-r * r)); });
  for (cd xi : {cd(0.8, 0.0), cd(-0.3, 0.9)})
    EXPECT_LT(std::abs(rotational_frft(nu, u, v, 2, gauss_r, xi) - frft_apply(p, mode2, xi, rule)), 1e-7);
  // Psi(r) = r, k = 1 is zeta = (pi/nu)^{1/2} nu^{-1/2} psi_{1,0}, eigenvalue u.
  const auto lin = RadialFunction::from_callable([](double r) { return cd(r); });
  const cd xi(0.6, -0.4);
  EXPECT_LT(std::abs(rotational_frft(nu, u, v, 1, lin, xi) - u * xi), 1e-10);

  const PlaneFunction ident = [](cd z) { return z; };
  const auto g = angular_coefficients(ident, -2, 2, 0.7, 8);
  for (auto [k, c] : g) EXPECT_NEAR(std::abs(c - (k == 1 ? cd(0.7) : cd(0.0))), 0.0, 1e-15) << k;
  const PlaneFunction c = [](cd) { return cd(2.0, -1.0); };
  EXPECT_NEAR(std::abs(angular_coefficients(c, 0, 0, 1.3, 8).at(0) - cd(2.0, -1.0)), 0.0, 1e-15);
}

TEST(ReferenceValues, Bargmann2) {
  const QuadrantRule rule = quadrant_rule(0.0, 0.0, 32);
  const QuadrantFunction zero = [](const QuadrantPoint&) { return cd(0.0); };
  EXPECT_EQ(bargmann2_apply(0.0, 0.0, zero, {0.2, 0.3}, rule), cd(0.0));
  const QuadrantFunction one = [](const QuadrantPoint&) { return cd(1.0); };
  EXPECT_NEAR(std::abs(bargmann2_apply(0.0, 0.0, one, {0.0, 0.0}, rule) - 1.0), 0.0, 1e-14);
}

TEST(ReferenceValues, Spectral) {
  EXPECT_NEAR(gamma_norm(BergmanParams(0.0, 0.0), {0, 0}), pi * pi, 1e-13);
  EXPECT_NEAR(gamma_norm(BergmanParams(0.0, 0.0), {1, 0}), pi * pi / 2, 1e-13);

  const BergmanParams bp(1.0, 1.0);
  const Spectrum s = spectrum(1.0, bp, cd(0.5, 0.5), 40, 40);
  EXPECT_DOUBLE_EQ(s.at({0, 0}), singular_value(1.0, bp, {0, 0}, cd(0.5, 0.5)));
  EXPECT_EQ(schatten_partial(Spectrum(1.0, bp, 0.0, -1, -1, {}), 2.0), 0.0);
  const double h20 = schatten_partial(s, 2.0, 20), h30 = schatten_partial(s, 2.0, 30), h40 = schatten_partial(s, 2.0, 40);
  EXPECT_LT((h40 - h20) / h40, 0.01);
  EXPECT_LE(h20, h30);
  EXPECT_LE(h30, h40);

  // k_0 = nu pi sum_k B(k+1, 2)^2 for alpha = beta = 1 (expand 1/(1-st)).
  double series = 0;
  for (int k = 0; k < 200000; ++k) series += 1.0 / std::pow((k + 1.0) * (k + 2.0), 2);
  const KwBracket k0 = kw_constant(1.0, bp, 0.0);
  EXPECT_NEAR(k0.value, pi * series, 1e-10);
  const KwBracket k1 = kw_constant(1.0, bp, 1.0);
  EXPECT_GE(k1.value, k1.lower);
  EXPECT_LE(k1.value, k1.upper);
  EXPECT_NEAR(k1.lower, pi / 4, 1e-15);
  EXPECT_LE(singular_value(1.0, bp, {0, 0}, 1.0), operator_norm_bound(1.0, bp, 1.0));

  for (int q : {2, 7})
    for (int p = 0; p < 30; ++p)
      EXPECT_GT(finite_rank_tail(1.0, bp, 1.0, p, q), finite_rank_tail(1.0, bp, 1.0, p + 1, q));
}
