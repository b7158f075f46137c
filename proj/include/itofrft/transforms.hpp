#pragma once

// The 2D fractional Fourier transform F^nu_{u,v}, its dual R^nu_w into the
// weighted Bergman space of the bi-disk, the adjoint R^*, the second
// Bargmann transform, and the fractional Hankel transform obtained by
// restricting F^nu_{u,v} to functions with a single angular mode.
//
// Integrals over C use a PlaneRule whose nu matches the transform; integrals
// over D^2 use a BidiskRule whose (alpha, beta) match the target space.

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "itofrft/bergman.hpp"
#include "itofrft/ito_hermite.hpp"
#include "itofrft/kernels.hpp"
#include "itofrft/quadrature.hpp"
#include "itofrft/specfun.hpp"

namespace itofrft {

using PlaneFunction = std::function<std::complex<double>(std::complex<double>)>;
using BidiskFunction = std::function<std::complex<double>(const BidiskPoint&)>;
using QuadrantFunction = std::function<std::complex<double>(const QuadrantPoint&)>;

/// Coefficients b_{m,n} of an analytic function sum b_{m,n} u^m v^n on D^2.
using BidiskSeries = std::map<PolyIndex, std::complex<double>>;

/// Finite expansion f = sum a_{m,n} psi^nu_{m,n} in L^2_nu(C).
class CoeffFunction {
 public:
  explicit CoeffFunction(double nu, std::map<PolyIndex, std::complex<double>> coeffs = {});

  /// Single basis function psi^nu_{m,n} with coefficient 1.
  static CoeffFunction basis(double nu, PolyIndex idx);

  double nu() const noexcept { return nu_; }
  const std::map<PolyIndex, std::complex<double>>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }

  /// (sum |a_{m,n}|^2)^{1/2}, the L^2_nu norm.
  double norm() const;

  std::complex<double> operator()(std::complex<double> z) const;

  /// f at every point (one batched Ito-Hermite table).
  std::vector<std::complex<double>> sample(std::span<const std::complex<double>> points) const;

 private:
  double nu_;
  std::map<PolyIndex, std::complex<double>> coeffs_;
  int max_m_ = 0;
  int max_n_ = 0;
};

/// Quadrature-weighted kernel row w_i K^nu_{u,v}(zeta_i; xi) over the plane
/// rule nodes. Dotting it with node samples of f gives F^nu_{u,v} f(xi).
std::vector<std::complex<double>> frft_row(const TransformParams& p, std::complex<double> xi,
                                           const PlaneRule& rule);

/// F^nu_{u,v} f(xi) = int_C f(zeta) K^nu_{u,v}(zeta; xi) e^{-nu|zeta|^2} dlambda(zeta).
/// Throws DomainError if the rule is not a plane rule with the same nu.
std::complex<double> frft_apply(const TransformParams& p, const CoeffFunction& f,
                                std::complex<double> xi, const PlaneRule& rule);
std::complex<double> frft_apply(const TransformParams& p, const PlaneFunction& f,
                                std::complex<double> xi, const PlaneRule& rule);
/// f given by its samples at rule.nodes().
std::complex<double> frft_apply_samples(const TransformParams& p,
                                        std::span<const std::complex<double>> samples,
                                        std::complex<double> xi, const PlaneRule& rule);

/// F^nu_{u,v} f at many points; f is sampled once.
std::vector<std::complex<double>> frft_apply_grid(const TransformParams& p, const CoeffFunction& f,
                                                  std::span<const std::complex<double>> xis,
                                                  const PlaneRule& rule);

/// R^nu_w f(u, v) = F^nu_{u,v} f(w). Shares the frft_apply code path.
std::complex<double> dual_apply(double nu, std::complex<double> w, const CoeffFunction& f,
                                const BidiskPoint& uv, const PlaneRule& rule);
std::complex<double> dual_apply(double nu, std::complex<double> w, const PlaneFunction& f,
                                const BidiskPoint& uv, const PlaneRule& rule);
std::complex<double> dual_apply_samples(double nu, std::complex<double> w,
                                        std::span<const std::complex<double>> samples,
                                        const BidiskPoint& uv, const PlaneRule& rule);

/// Quadrature-free R^nu_w f(u, v) = sum a_{m,n} psi_{m,n}(w) u^m v^n.
std::complex<double> dual_apply_coeff(double nu, std::complex<double> w, const CoeffFunction& f,
                                      const BidiskPoint& uv);

/// Bergman coefficients of R^nu_w f: b_{m,n} = a_{m,n} psi_{m,n}(w).
BidiskSeries dual_image(std::complex<double> w, const CoeffFunction& f);

/// (R^nu_w)^* g(z) = int_{D^2} g(u, v) conj(K^nu_{u,v}(z; w)) dmu_{alpha,beta}(u, v).
/// Throws DomainError if the rule is not a bidisk rule for (alpha, beta).
std::complex<double> adjoint_apply(double nu, std::complex<double> w, double alpha, double beta,
                                   const BidiskFunction& g, std::complex<double> z,
                                   const BidiskRule& rule);
/// g given by its samples at rule.nodes().
std::complex<double> adjoint_apply_samples(double nu, std::complex<double> w,
                                           std::span<const std::complex<double>> samples,
                                           std::complex<double> z, const BidiskRule& rule);

/// (sum gamma_{m,n} |b_{m,n}|^2)^{1/2}.
double bergman_norm(const BidiskSeries& b, const BergmanParams& bp);

/// Radial profile Psi(r) of a function Psi(|zeta|) e^{ik theta}.
class RadialFunction {
 public:
  enum class Kind { coeff_profile, callable };

  static RadialFunction from_callable(std::function<std::complex<double>(double)> fn);

  /// Angular mode k of a finite expansion: g_k(r) = sum_{m-n=k} a_{m,n} psi_{m,n}(r).
  static RadialFunction mode_profile(const CoeffFunction& f, int k);

  Kind kind() const noexcept { return kind_; }
  std::complex<double> operator()(double r) const { return fn_(r); }

 private:
  RadialFunction(Kind kind, std::function<std::complex<double>(double)> fn)
      : kind_(kind), fn_(std::move(fn)) {}

  Kind kind_;
  std::function<std::complex<double>(double)> fn_;
};

/// Fractional Hankel transform
///   (2nu/(1-uv)) (u/v)^{order/2} int_0^inf x Psi(x) I_order(2nu sqrt(uv) x y/(1-uv))
///       e^{-nu (x^2 + uv y^2)/(1-uv)} dx,
/// for real u, v in (0, 1), by Gauss-Laguerre in t = nu x^2 / (1-uv).
std::complex<double> hankel_apply(double nu, RealOrder order, double u, double v,
                                  const RadialFunction& psi, double y, int n_radial = 64);

/// F^nu_{u,v} applied to Psi(|zeta|) e^{ik theta}:
///   e^{ik phi} hankel_apply(order |k|)(|xi|) for xi = |xi| e^{i phi}.
/// Negative k swaps u and v (the I_{|k|} kernel picks up (v/u)^{|k|/2}).
std::complex<double> rotational_frft(double nu, double u, double v, int k,
                                     const RadialFunction& psi, std::complex<double> xi,
                                     int n_radial = 64);

/// g_k(r) = (1/2pi) int_0^{2pi} f(r e^{i theta}) e^{-ik theta} dtheta for
/// k_min <= k <= k_max by the uniform rule. Requires n_angular > 2 max|k|.
std::map<int, std::complex<double>> angular_coefficients(const PlaneFunction& f, int k_min,
                                                         int k_max, double r, int n_angular);

/// Second Bargmann transform
///   (1-z)^{-alpha-1} (1-w)^{-beta-1} int s^alpha t^beta
///       exp[(s w + t z - s - t) / ((1-z)(1-w))] phi(s, t) ds dt
/// for zw = (z, w) in D^2, using a quadrant rule with the same (alpha, beta).
std::complex<double> bargmann2_apply(double alpha, double beta, const QuadrantFunction& phi,
                                     const BidiskPoint& zw, const QuadrantRule& rule);

/// The second Bargmann transform maps L_m^{(alpha)}(s) L_n^{(beta)}(t) to
/// this constant times z^m w^n:
///   Gamma(m + alpha + 1) Gamma(n + beta + 1) / (m! n!).
double bargmann2_laguerre_coefficient(double alpha, double beta, PolyIndex idx);

}  // namespace itofrft
