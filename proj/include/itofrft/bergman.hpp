#pragma once

// Weighted Bergman space B^2_{alpha,beta}(D^2) on the bi-disk: weight
// parameters and the square norms of the monomials e_{m,n}(u, v) = u^m v^n.

#include <complex>

#include "itofrft/ito_hermite.hpp"

namespace itofrft {

/// Weight exponents (1-|u|^2)^alpha (1-|v|^2)^beta. The spaces exist for
/// alpha, beta > -1; the dual transform is bounded into them only for
/// alpha, beta > 0.
class BergmanParams {
 public:
  BergmanParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// alpha > 0 and beta > 0.
  bool bounded_regime() const noexcept { return alpha_ > 0.0 && beta_ > 0.0; }

  /// Throws DomainError quoting the required regime when !bounded_regime().
  void require_bounded_regime() const;

 private:
  double alpha_;
  double beta_;
};

/// ln gamma^{alpha,beta}_{m,n}, see gamma_norm().
double log_gamma_norm(const BergmanParams& bp, PolyIndex idx);

/// gamma^{alpha,beta}_{m,n} = ||e_{m,n}||^2
///   = pi^2 Gamma(alpha+1) Gamma(beta+1) m! n! / (Gamma(alpha+m+2) Gamma(beta+n+2)).
double gamma_norm(const BergmanParams& bp, PolyIndex idx);

/// Orthonormal basis element phi_{m,n} = gamma_{m,n}^{-1/2} e_{m,n}.
std::complex<double> bergman_basis(const BergmanParams& bp, PolyIndex idx, std::complex<double> u,
                                   std::complex<double> v);

}  // namespace itofrft
