#pragma once

// Kernel functions: the complex Mehler function (closed form and its
// Ito-Hermite expansion), the 2D fractional Fourier kernel, the Bergman
// reproducing kernel of the bi-disk, and the Gram kernel of R^* R.

#include <complex>

#include "itofrft/quadrature.hpp"

namespace itofrft {

/// Scaling nu > 0 and fractional parameters u, v in the open unit disk.
class TransformParams {
 public:
  TransformParams(double nu, std::complex<double> u, std::complex<double> v);

  double nu() const noexcept { return nu_; }
  std::complex<double> u() const noexcept { return u_; }
  std::complex<double> v() const noexcept { return v_; }

 private:
  double nu_;
  std::complex<double> u_;
  std::complex<double> v_;
};

/// Exponents whose real part exceeds this raise NonFiniteError.
inline constexpr double kExponentGuard = 700.0;

/// K^{nu;nu}_{u,v}(z, w) =
///   exp[(-uv nu (|z|^2 + |w|^2) + nu u z w + nu v zbar wbar) / (1 - uv)] / (1 - uv).
std::complex<double> mehler_closed(const TransformParams& p, std::complex<double> z,
                                   std::complex<double> w);

/// sum_{m,n <= trunc} u^m v^n psi_{m,n}(z) psi_{m,n}(w).
///
/// The expansion converges to (nu/pi) mehler_closed(p, z, w): the constant
/// term is psi_{0,0}^2 = nu/pi while the closed form starts at 1.
std::complex<double> mehler_series(const TransformParams& p, std::complex<double> z,
                                   std::complex<double> w, int trunc);

/// K^nu_{u,v}(zeta; xi) =
///   nu / (pi (1-uv)) exp[nu (-uv (|zeta|^2 + |xi|^2) + u conj(zeta) xi + v zeta conj(xi)) / (1-uv)],
/// equal to (nu/pi) mehler_closed(p, conj(zeta), xi).
std::complex<double> frft_kernel(const TransformParams& p, std::complex<double> zeta,
                                 std::complex<double> xi);

/// Reproducing kernel of B^2_{alpha,beta}(D^2):
///   (alpha+1)(beta+1) / (pi^2 (1 - u conj(z))^{alpha+2} (1 - v conj(w))^{beta+2})
/// for a = (u, v), b = (z, w). Principal branch (the bases have positive
/// real part on the bi-disk).
std::complex<double> bergman_kernel(double alpha, double beta, const BidiskPoint& a,
                                    const BidiskPoint& b);

/// S_w(zeta, z) = sum_{m,n <= trunc} |c_{m,n}(w)|^2 psi_{m,n}(z) conj(psi_{m,n}(zeta))
/// with c_{m,n}(w) = psi_{m,n}(w) gamma_{m,n}^{1/2}.
std::complex<double> gram_kernel(double nu, double alpha, double beta, std::complex<double> w,
                                 std::complex<double> zeta, std::complex<double> z, int trunc);

}  // namespace itofrft
