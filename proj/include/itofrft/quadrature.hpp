#pragma once

// Deterministic Gaussian product rules for the measures that appear in the
// transforms:
//
//   plane     e^{-nu|z|^2} dlambda(z) on C
//   bidisk    (1-|u|^2)^alpha (1-|v|^2)^beta dlambda(u) dlambda(v) on D x D
//   quadrant  s^alpha t^beta e^{-s-t} ds dt on (0, inf)^2
//   radial    x^alpha e^{-x} dx on (0, inf)
//   angular   dtheta / (2 pi) on the circle
//
// One-dimensional Gauss nodes are the eigenvalues of the Jacobi matrix of
// the weight, isolated by Sturm-sequence bisection and polished by Newton
// steps on the three-term recurrence. Weights come from the Christoffel
// sum. Rules are immutable after construction.

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace itofrft {

enum class RuleKind { plane, bidisk, quadrant, radial, angular };

std::string rule_kind_name(RuleKind kind);

/// Weight parameters baked into a rule (unused fields stay zero).
struct RuleParams {
  double nu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct BidiskPoint {
  std::complex<double> u;
  std::complex<double> v;
};

struct QuadrantPoint {
  double s = 0.0;
  double t = 0.0;
};

template <class Point>
class QuadratureRule {
 public:
  QuadratureRule(RuleKind kind, RuleParams params, std::vector<Point> nodes,
                 std::vector<double> weights);

  RuleKind kind() const noexcept { return kind_; }
  const RuleParams& params() const noexcept { return params_; }
  std::span<const Point> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  RuleKind kind_;
  RuleParams params_;
  std::vector<Point> nodes_;
  std::vector<double> weights_;
};

using PlaneRule = QuadratureRule<std::complex<double>>;
using BidiskRule = QuadratureRule<BidiskPoint>;
using QuadrantRule = QuadratureRule<QuadrantPoint>;
using RadialRule = QuadratureRule<double>;

/// Generalized Gauss-Laguerre rule for x^alpha e^{-x} on (0, inf); exact
/// for polynomials of degree <= 2n-1. Nodes whose weight underflows to zero
/// (n beyond ~180) are omitted, so size() may be less than n.
RadialRule gauss_laguerre(int n, double alpha);

/// Gauss-Jacobi rule on [0, 1] for the weight (1-s)^alpha s^beta.
RadialRule gauss_jacobi_unit(int n, double alpha, double beta = 0.0);

/// Cached gauss_laguerre(n, alpha); safe to call from several threads.
const RadialRule& cached_gauss_laguerre(int n, double alpha);

/// Roots of L_n^{(alpha)} in increasing order (the Gauss-Laguerre nodes,
/// without forming weights, so large n and alpha are fine).
std::vector<double> laguerre_roots(int n, double alpha);

/// Polar product rule for int_C f(z) e^{-nu|z|^2} dlambda(z): Gauss-Laguerre
/// in t = nu r^2 times the uniform rule theta_j = 2 pi j / n_angular. Exact
/// for z^a zbar^b whenever a + b <= 2 n_radial - 1 and |a - b| < n_angular.
PlaneRule plane_rule(double nu, int n_radial = 64, int n_angular = 64);

/// Product of two polar rules on the disk for (1-|u|^2)^alpha (1-|v|^2)^beta;
/// each radial factor is Gauss-Jacobi in s = |u|^2.
BidiskRule bidisk_rule(double alpha, double beta, int n_radial = 64, int n_angular = 64);

/// Tensor generalized Gauss-Laguerre rule for s^alpha t^beta e^{-s-t}.
QuadrantRule quadrant_rule(double alpha, double beta, int n = 64);

/// Uniform rule on the circle normalized to total mass 1.
RadialRule angular_rule(int n_angular);

/// sum_i w_i f(node_i).
///
/// f must be safe to call concurrently from several threads: the evaluation
/// order over nodes is unspecified. A non-finite sample raises
/// NonFiniteError naming the node.
template <class Point>
std::complex<double> integrate(const QuadratureRule<Point>& rule,
                               const std::function<std::complex<double>(const Point&)>& f);

/// Same as integrate() for samples already taken at the rule's nodes.
template <class Point>
std::complex<double> integrate_samples(const QuadratureRule<Point>& rule,
                                       std::span<const std::complex<double>> samples);

}  // namespace itofrft
