#include "itofrft/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "itofrft/error.hpp"
#include "itofrft/simd.hpp"
#include "itofrft/specfun.hpp"

namespace itofrft {
namespace {

// Monic three-term recurrence p_{k+1} = (x - diag[k]) p_k - offsq[k] p_{k-1}
// (offsq[0] unused) together with log of the weight's total mass.
struct Recurrence {
  std::vector<double> diag;
  std::vector<double> offsq;
  double log_mu0 = 0.0;
};

Recurrence laguerre_recurrence(int n, double alpha) {
  Recurrence r;
  r.diag.resize(n);
  r.offsq.assign(n, 0.0);
  for (int k = 0; k < n; ++k) {
    r.diag[k] = 2.0 * k + alpha + 1.0;
    if (k > 0) r.offsq[k] = k * (k + alpha);
  }
  r.log_mu0 = specfun::log_gamma(alpha + 1.0);
  return r;
}

// Jacobi weight (1-x)^a (1+x)^b on [-1, 1].
Recurrence jacobi_recurrence(int n, double a, double b) {
  Recurrence r;
  r.diag.resize(n);
  r.offsq.assign(n, 0.0);
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    r.diag[k] = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      r.offsq[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else if (k > 1) {
      r.offsq[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  r.log_mu0 = (ab + 1.0) * std::numbers::ln2 + specfun::log_gamma(a + 1.0) +
              specfun::log_gamma(b + 1.0) - specfun::log_gamma(ab + 2.0);
  return r;
}

// Number of eigenvalues of the Jacobi matrix strictly below x (Sturm count
// through the LDL^T pivots).
int eigen_count_below(const Recurrence& r, double x) {
  constexpr double kTiny = 1e-300;
  int count = 0;
  double d = 1.0;
  for (std::size_t k = 0; k < r.diag.size(); ++k) {
    d = (r.diag[k] - x) - (k > 0 ? r.offsq[k] / d : 0.0);
    if (d == 0.0) d = -kTiny;
    if (d < 0.0) ++count;
  }
  return count;
}

// p_n(x) / p_n'(x) with on-the-fly rescaling so that large degrees and
// arguments do not overflow.
double newton_step(const Recurrence& r, double x) {
  double p_prev = 0.0, p = 1.0;
  double d_prev = 0.0, d = 0.0;
  for (std::size_t k = 0; k < r.diag.size(); ++k) {
    const double off = k > 0 ? r.offsq[k] : 0.0;
    const double p_next = (x - r.diag[k]) * p - off * p_prev;
    const double d_next = p + (x - r.diag[k]) * d - off * d_prev;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    const double mag = std::max(std::abs(p), std::abs(d));
    if (mag > 1e150) {
      p_prev /= mag;
      p /= mag;
      d_prev /= mag;
      d /= mag;
    }
  }
  return p / d;
}

std::vector<double> gauss_nodes(const Recurrence& r) {
  const int n = static_cast<int>(r.diag.size());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int k = 0; k < n; ++k) {
    const double left = k > 0 ? std::sqrt(r.offsq[k]) : 0.0;
    const double right = k + 1 < n ? std::sqrt(r.offsq[k + 1]) : 0.0;
    lo = std::min(lo, r.diag[k] - left - right);
    hi = std::max(hi, r.diag[k] + left + right);
  }

  std::vector<double> nodes(n);
  double floor = lo;
  for (int i = 0; i < n; ++i) {
    double a = floor;
    double b = hi;
    for (int it = 0; it < 2000 && b - a > 2.0 * std::numeric_limits<double>::epsilon() *
                                               std::max(std::abs(a), std::abs(b));
         ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (eigen_count_below(r, mid) > i) {
        b = mid;
      } else {
        a = mid;
      }
    }
    double x = 0.5 * (a + b);
    for (int it = 0; it < 3; ++it) {
      const double next = x - newton_step(r, x);
      if (!std::isfinite(next) || next < a - (b - a) || next > b + (b - a)) break;
      x = next;
    }
    nodes[i] = x;
    floor = a;
  }
  return nodes;
}

// Christoffel weights w_i = mu0 / sum_k ptilde_k(x_i)^2 with ptilde the
// orthonormal polynomials scaled to ptilde_0 = 1.
void drop_underflow(std::vector<double>& nodes, std::vector<double>& weights) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] > 0.0) {
      nodes[k] = nodes[i];
      weights[k] = weights[i];
      ++k;
    }
  }
  nodes.resize(k);
  weights.resize(k);
}

std::vector<double> gauss_weights(const Recurrence& r, const std::vector<double>& nodes) {
  std::vector<double> weights(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    double prev = 0.0, cur = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    for (std::size_t k = 0; k + 1 < r.diag.size(); ++k) {
      const double off_k = k > 0 ? std::sqrt(r.offsq[k]) : 0.0;
      const double next = ((x - r.diag[k]) * cur - off_k * prev) / std::sqrt(r.offsq[k + 1]);
      prev = cur;
      cur = next;
      sum += cur * cur;
      if (std::abs(cur) > 1e100) {
        prev *= 1e-100;
        cur *= 1e-100;
        sum *= 1e-200;
        log_scale += 200.0 * std::numbers::ln10;
      }
    }
    // exp underflows to 0 for the outermost nodes of large rules; the caller
    // drops those nodes.
    const double w = std::exp(r.log_mu0 - std::log(sum) - log_scale);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      std::ostringstream msg;
      msg << "quadrature weight at node " << x << " is not a positive finite number";
      throw NonFiniteError(msg.str());
    }
    weights[i] = w;
  }
  return weights;
}

void check_count(int n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": rule size must be at least 1");
}

void check_exponent(double e, const char* what) {
  if (!(e > -1.0) || !std::isfinite(e)) {
    throw DomainError(std::string(what) + ": weight exponent must exceed -1");
  }
}

}  // namespace

std::string rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::plane: return "plane";
    case RuleKind::bidisk: return "bidisk";
    case RuleKind::quadrant: return "quadrant";
    case RuleKind::radial: return "radial";
    case RuleKind::angular: return "angular";
  }
  return "unknown";
}

template <class Point>
QuadratureRule<Point>::QuadratureRule(RuleKind kind, RuleParams params, std::vector<Point> nodes,
                                      std::vector<double> weights)
    : kind_(kind), params_(params), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size()) {
    throw DomainError("QuadratureRule: node and weight counts differ");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw DomainError("QuadratureRule: weights must be strictly positive");
  }
}

RadialRule gauss_laguerre(int n, double alpha) {
  check_count(n, "gauss_laguerre");
  check_exponent(alpha, "gauss_laguerre");
  const Recurrence r = laguerre_recurrence(n, alpha);
  std::vector<double> nodes = gauss_nodes(r);
  std::vector<double> weights = gauss_weights(r, nodes);
  drop_underflow(nodes, weights);
  return RadialRule(RuleKind::radial, {0.0, alpha, 0.0}, std::move(nodes), std::move(weights));
}

RadialRule gauss_jacobi_unit(int n, double alpha, double beta) {
  check_count(n, "gauss_jacobi_unit");
  check_exponent(alpha, "gauss_jacobi_unit");
  check_exponent(beta, "gauss_jacobi_unit");
  const Recurrence r = jacobi_recurrence(n, alpha, beta);
  const std::vector<double> x = gauss_nodes(r);
  const std::vector<double> wx = gauss_weights(r, x);
  const double scale = std::exp(-(alpha + beta + 1.0) * std::numbers::ln2);
  std::vector<double> nodes(x.size());
  std::vector<double> weights(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    nodes[i] = 0.5 * (1.0 + x[i]);
    weights[i] = wx[i] * scale;
  }
  drop_underflow(nodes, weights);
  return RadialRule(RuleKind::radial, {0.0, alpha, beta}, std::move(nodes), std::move(weights));
}

const RadialRule& cached_gauss_laguerre(int n, double alpha) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, std::unique_ptr<RadialRule>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, alpha}];
  if (!slot) slot = std::make_unique<RadialRule>(gauss_laguerre(n, alpha));
  return *slot;
}

std::vector<double> laguerre_roots(int n, double alpha) {
  if (n == 0) return {};
  check_count(n, "laguerre_roots");
  check_exponent(alpha, "laguerre_roots");
  return gauss_nodes(laguerre_recurrence(n, alpha));
}

PlaneRule plane_rule(double nu, int n_radial, int n_angular) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("plane_rule: nu must be positive");
  check_count(n_radial, "plane_rule");
  check_count(n_angular, "plane_rule");
  const RadialRule& radial = cached_gauss_laguerre(n_radial, 0.0);
  std::vector<std::complex<double>> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
  weights.reserve(nodes.capacity());
  const double dtheta = 2.0 * std::numbers::pi / n_angular;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = std::sqrt(radial.nodes()[i] / nu);
    const double w = radial.weights()[i] * dtheta / (2.0 * nu);
    for (int j = 0; j < n_angular; ++j) {
      nodes.push_back(std::polar(r, j * dtheta));
      weights.push_back(w);
    }
  }
  return PlaneRule(RuleKind::plane, {nu, 0.0, 0.0}, std::move(nodes), std::move(weights));
}

BidiskRule bidisk_rule(double alpha, double beta, int n_radial, int n_angular) {
  check_count(n_radial, "bidisk_rule");
  check_count(n_angular, "bidisk_rule");
  const RadialRule ru = gauss_jacobi_unit(n_radial, alpha);
  const RadialRule rv = gauss_jacobi_unit(n_radial, beta);
  const double dtheta = 2.0 * std::numbers::pi / n_angular;

  // One polar rule per disk; dlambda = (1/2) ds dtheta with s = |u|^2.
  const auto disk = [&](const RadialRule& radial, std::vector<std::complex<double>>& pts,
                        std::vector<double>& wts) {
    for (std::size_t i = 0; i < radial.size(); ++i) {
      const double r = std::sqrt(radial.nodes()[i]);
      for (int j = 0; j < n_angular; ++j) {
        pts.push_back(std::polar(r, j * dtheta));
        wts.push_back(0.5 * radial.weights()[i] * dtheta);
      }
    }
  };
  std::vector<std::complex<double>> pu, pv;
  std::vector<double> wu, wv;
  disk(ru, pu, wu);
  disk(rv, pv, wv);

  std::vector<BidiskPoint> nodes;
  std::vector<double> weights;
  nodes.reserve(pu.size() * pv.size());
  weights.reserve(pu.size() * pv.size());
  for (std::size_t a = 0; a < pu.size(); ++a) {
    for (std::size_t b = 0; b < pv.size(); ++b) {
      nodes.push_back({pu[a], pv[b]});
      weights.push_back(wu[a] * wv[b]);
    }
  }
  return BidiskRule(RuleKind::bidisk, {0.0, alpha, beta}, std::move(nodes), std::move(weights));
}

QuadrantRule quadrant_rule(double alpha, double beta, int n) {
  check_count(n, "quadrant_rule");
  const RadialRule rs = gauss_laguerre(n, alpha);
  const RadialRule rt = gauss_laguerre(n, beta);
  std::vector<QuadrantPoint> nodes;
  std::vector<double> weights;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rt.size(); ++j) {
      nodes.push_back({rs.nodes()[i], rt.nodes()[j]});
      weights.push_back(rs.weights()[i] * rt.weights()[j]);
    }
  }
  return QuadrantRule(RuleKind::quadrant, {0.0, alpha, beta}, std::move(nodes), std::move(weights));
}

RadialRule angular_rule(int n_angular) {
  check_count(n_angular, "angular_rule");
  std::vector<double> nodes(n_angular);
  std::vector<double> weights(n_angular, 1.0 / n_angular);
  for (int j = 0; j < n_angular; ++j) nodes[j] = 2.0 * std::numbers::pi * j / n_angular;
  return RadialRule(RuleKind::angular, {}, std::move(nodes), std::move(weights));
}

namespace {

std::string describe(const std::complex<double>& z) {
  std::ostringstream s;
  s << "z=(" << z.real() << "," << z.imag() << ")";
  return s.str();
}
std::string describe(const BidiskPoint& p) {
  std::ostringstream s;
  s << "u=(" << p.u.real() << "," << p.u.imag() << "), v=(" << p.v.real() << "," << p.v.imag()
    << ")";
  return s.str();
}
std::string describe(const QuadrantPoint& p) {
  std::ostringstream s;
  s << "s=" << p.s << ", t=" << p.t;
  return s.str();
}
std::string describe(double x) {
  std::ostringstream s;
  s << "x=" << x;
  return s.str();
}

}  // namespace

template <class Point>
std::complex<double> integrate(const QuadratureRule<Point>& rule,
                               const std::function<std::complex<double>(const Point&)>& f) {
  std::vector<std::complex<double>> samples(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    samples[i] = f(rule.nodes()[i]);
    if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag())) {
      throw NonFiniteError("integrand is not finite at " + rule_kind_name(rule.kind()) +
                           " node " + std::to_string(i) + " (" + describe(rule.nodes()[i]) + ")");
    }
  }
  return simd::weighted_sum(rule.weights(), samples);
}

template <class Point>
std::complex<double> integrate_samples(const QuadratureRule<Point>& rule,
                                       std::span<const std::complex<double>> samples) {
  if (samples.size() != rule.size()) {
    throw DomainError("integrate_samples: sample count does not match the rule");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag())) {
      throw NonFiniteError("integrand is not finite at " + rule_kind_name(rule.kind()) +
                           " node " + std::to_string(i) + " (" + describe(rule.nodes()[i]) + ")");
    }
  }
  return simd::weighted_sum(rule.weights(), samples);
}

#define ITOFRFT_INSTANTIATE_RULE(Point)                                                   \
  template class QuadratureRule<Point>;                                                   \
  template std::complex<double> integrate<Point>(                                         \
      const QuadratureRule<Point>&, const std::function<std::complex<double>(const Point&)>&); \
  template std::complex<double> integrate_samples<Point>(                                 \
      const QuadratureRule<Point>&, std::span<const std::complex<double>>);

ITOFRFT_INSTANTIATE_RULE(std::complex<double>)
ITOFRFT_INSTANTIATE_RULE(BidiskPoint)
ITOFRFT_INSTANTIATE_RULE(QuadrantPoint)
ITOFRFT_INSTANTIATE_RULE(double)

#undef ITOFRFT_INSTANTIATE_RULE

}  // namespace itofrft
