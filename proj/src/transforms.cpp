#include "itofrft/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "itofrft/detail/ipow.hpp"
#include "itofrft/error.hpp"
#include "itofrft/simd.hpp"

namespace itofrft {
namespace {

void check_plane_rule(const PlaneRule& rule, double nu) {
  if (rule.kind() != RuleKind::plane || rule.params().nu != nu) {
    std::ostringstream msg;
    msg << "quadrature rule mismatch: expected a plane rule with nu=" << nu << ", got "
        << rule_kind_name(rule.kind()) << " rule with nu=" << rule.params().nu;
    throw DomainError(msg.str());
  }
}

void check_real_fraction(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << "fractional Hankel transform requires real " << name << " in (0, 1), got " << x;
    throw DomainError(msg.str());
  }
}

void check_finite(std::complex<double> x, const char* what) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    throw NonFiniteError(std::string(what) + ": non-finite sample");
  }
}

}  // namespace

// CoeffFunction

CoeffFunction::CoeffFunction(double nu, std::map<PolyIndex, std::complex<double>> coeffs)
    : nu_(nu), coeffs_(std::move(coeffs)) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("CoeffFunction: nu must be positive");
  for (const auto& [idx, a] : coeffs_) {
    check_index(idx);
    check_finite(a, "CoeffFunction coefficient");
    max_m_ = std::max(max_m_, idx.m);
    max_n_ = std::max(max_n_, idx.n);
  }
}

CoeffFunction CoeffFunction::basis(double nu, PolyIndex idx) {
  return CoeffFunction(nu, {{idx, {1.0, 0.0}}});
}

double CoeffFunction::norm() const {
  double s = 0.0;
  for (const auto& [idx, a] : coeffs_) s += std::norm(a);
  return std::sqrt(s);
}

std::complex<double> CoeffFunction::operator()(std::complex<double> z) const {
  const std::complex<double> pt[1] = {z};
  return sample(pt)[0];
}

std::vector<std::complex<double>> CoeffFunction::sample(
    std::span<const std::complex<double>> points) const {
  std::vector<std::complex<double>> out(points.size(), {0.0, 0.0});
  if (coeffs_.empty()) return out;
  const PsiGrid grid(nu_, points, max_m_, max_n_);
  for (const auto& [idx, a] : coeffs_) {
    const auto vals = grid.values(idx);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * vals[i];
  }
  return out;
}

// Fractional Fourier transform and its dual

std::vector<std::complex<double>> frft_row(const TransformParams& p, std::complex<double> xi,
                                           const PlaneRule& rule) {
  check_plane_rule(rule, p.nu());
  std::vector<std::complex<double>> row(rule.size());
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = weights[i] * frft_kernel(p, nodes[i], xi);
  return row;
}

std::complex<double> frft_apply_samples(const TransformParams& p,
                                        std::span<const std::complex<double>> samples,
                                        std::complex<double> xi, const PlaneRule& rule) {
  check_plane_rule(rule, p.nu());
  if (samples.size() != rule.size()) {
    throw DomainError("frft_apply: sample count does not match the plane rule");
  }
  const std::vector<std::complex<double>> row = frft_row(p, xi, rule);
  return simd::dot(row, samples);
}

std::complex<double> frft_apply(const TransformParams& p, const CoeffFunction& f,
                                std::complex<double> xi, const PlaneRule& rule) {
  check_plane_rule(rule, p.nu());
  if (f.nu() != p.nu()) throw DomainError("frft_apply: CoeffFunction nu differs from transform nu");
  return frft_apply_samples(p, f.sample(rule.nodes()), xi, rule);
}

std::complex<double> frft_apply(const TransformParams& p, const PlaneFunction& f,
                                std::complex<double> xi, const PlaneRule& rule) {
  check_plane_rule(rule, p.nu());
  std::vector<std::complex<double>> samples(rule.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = f(rule.nodes()[i]);
    check_finite(samples[i], "frft_apply");
  }
  return frft_apply_samples(p, samples, xi, rule);
}

std::vector<std::complex<double>> frft_apply_grid(const TransformParams& p, const CoeffFunction& f,
                                                  std::span<const std::complex<double>> xis,
                                                  const PlaneRule& rule) {
  check_plane_rule(rule, p.nu());
  if (f.nu() != p.nu()) throw DomainError("frft_apply: CoeffFunction nu differs from transform nu");
  const std::vector<std::complex<double>> samples = f.sample(rule.nodes());
  std::vector<std::complex<double>> out;
  out.reserve(xis.size());
  for (std::complex<double> xi : xis) out.push_back(frft_apply_samples(p, samples, xi, rule));
  return out;
}

std::complex<double> dual_apply(double nu, std::complex<double> w, const CoeffFunction& f,
                                const BidiskPoint& uv, const PlaneRule& rule) {
  return frft_apply(TransformParams(nu, uv.u, uv.v), f, w, rule);
}

std::complex<double> dual_apply(double nu, std::complex<double> w, const PlaneFunction& f,
                                const BidiskPoint& uv, const PlaneRule& rule) {
  return frft_apply(TransformParams(nu, uv.u, uv.v), f, w, rule);
}

std::complex<double> dual_apply_samples(double nu, std::complex<double> w,
                                        std::span<const std::complex<double>> samples,
                                        const BidiskPoint& uv, const PlaneRule& rule) {
  return frft_apply_samples(TransformParams(nu, uv.u, uv.v), samples, w, rule);
}

std::complex<double> dual_apply_coeff(double nu, std::complex<double> w, const CoeffFunction& f,
                                      const BidiskPoint& uv) {
  if (f.nu() != nu) throw DomainError("dual_apply_coeff: CoeffFunction nu differs from nu");
  TransformParams(nu, uv.u, uv.v);  // validates |u|, |v| < 1
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [idx, b] : dual_image(w, f)) {
    sum += b * detail::ipow(uv.u, idx.m) * detail::ipow(uv.v, idx.n);
  }
  return sum;
}

BidiskSeries dual_image(std::complex<double> w, const CoeffFunction& f) {
  BidiskSeries out;
  if (f.empty()) return out;
  const std::complex<double> pt[1] = {w};
  const PsiGrid grid(f.nu(), pt, f.max_m(), f.max_n());
  for (const auto& [idx, a] : f.coeffs()) out[idx] = a * grid.at(idx, 0);
  return out;
}

std::complex<double> adjoint_apply_samples(double nu, std::complex<double> w,
                                           std::span<const std::complex<double>> samples,
                                           std::complex<double> z, const BidiskRule& rule) {
  if (rule.kind() != RuleKind::bidisk) {
    throw DomainError("adjoint_apply: expected a bidisk rule, got " + rule_kind_name(rule.kind()));
  }
  if (samples.size() != rule.size()) {
    throw DomainError("adjoint_apply: sample count does not match the bidisk rule");
  }
  std::vector<std::complex<double>> integrand(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const BidiskPoint& uv = rule.nodes()[j];
    integrand[j] = samples[j] * std::conj(frft_kernel(TransformParams(nu, uv.u, uv.v), z, w));
  }
  return integrate_samples(rule, integrand);
}

std::complex<double> adjoint_apply(double nu, std::complex<double> w, double alpha, double beta,
                                   const BidiskFunction& g, std::complex<double> z,
                                   const BidiskRule& rule) {
  if (rule.kind() != RuleKind::bidisk || rule.params().alpha != alpha ||
      rule.params().beta != beta) {
    std::ostringstream msg;
    msg << "quadrature rule mismatch: expected a bidisk rule with alpha=" << alpha
        << ", beta=" << beta;
    throw DomainError(msg.str());
  }
  std::vector<std::complex<double>> samples(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    samples[j] = g(rule.nodes()[j]);
    check_finite(samples[j], "adjoint_apply");
  }
  return adjoint_apply_samples(nu, w, samples, z, rule);
}

double bergman_norm(const BidiskSeries& b, const BergmanParams& bp) {
  double s = 0.0;
  for (const auto& [idx, coef] : b) {
    if (coef != 0.0) s += gamma_norm(bp, idx) * std::norm(coef);
  }
  return std::sqrt(s);
}

// Fractional Hankel transform

RadialFunction RadialFunction::from_callable(std::function<std::complex<double>(double)> fn) {
  return RadialFunction(Kind::callable, std::move(fn));
}

RadialFunction RadialFunction::mode_profile(const CoeffFunction& f, int k) {
  std::map<PolyIndex, std::complex<double>> mode;
  for (const auto& [idx, a] : f.coeffs()) {
    if (idx.m - idx.n == k) mode.emplace(idx, a);
  }
  // psi_{m,n}(r e^{i theta}) = psi_{m,n}(r) e^{i (m-n) theta}
  auto profile = std::make_shared<const CoeffFunction>(f.nu(), std::move(mode));
  return RadialFunction(Kind::coeff_profile,
                        [profile](double r) { return (*profile)(std::complex<double>(r, 0.0)); });
}

std::complex<double> hankel_apply(double nu, RealOrder order, double u, double v,
                                  const RadialFunction& psi, double y, int n_radial) {
  if (!(nu > 0.0)) throw DomainError("hankel_apply: nu must be positive");
  check_real_fraction(u, "u");
  check_real_fraction(v, "v");
  if (!(y >= 0.0) || !std::isfinite(y)) throw DomainError("hankel_apply: y must be non-negative");

  const double uv = u * v;
  const double ell = nu / (1.0 - uv);
  const double b = 2.0 * ell * std::sqrt(uv) * y;
  const RadialRule& rule = cached_gauss_laguerre(n_radial, 0.0);

  std::vector<std::complex<double>> samples(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = std::sqrt(rule.nodes()[i] / ell);
    samples[i] = psi(x) * specfun::bessel_i(order, b * x);
  }
  // x dx = dt / (2 ell) cancels the 2 ell prefactor.
  const double prefactor =
      std::pow(u / v, 0.5 * order.value()) * std::exp(-ell * uv * y * y);
  return prefactor * integrate_samples(rule, samples);
}

std::complex<double> rotational_frft(double nu, double u, double v, int k,
                                     const RadialFunction& psi, std::complex<double> xi,
                                     int n_radial) {
  const double rho = std::abs(xi);
  if (rho == 0.0) {
    if (k != 0) return {0.0, 0.0};
    return hankel_apply(nu, RealOrder(0.0), u, v, psi, 0.0, n_radial);
  }
  const std::complex<double> phase = detail::ipow(xi / rho, std::abs(k));
  if (k >= 0) return phase * hankel_apply(nu, RealOrder(k), u, v, psi, rho, n_radial);
  return std::conj(phase) * hankel_apply(nu, RealOrder(-k), v, u, psi, rho, n_radial);
}

std::map<int, std::complex<double>> angular_coefficients(const PlaneFunction& f, int k_min,
                                                         int k_max, double r, int n_angular) {
  if (k_min > k_max) throw DomainError("angular_coefficients: empty mode range");
  const int kmax_abs = std::max(std::abs(k_min), std::abs(k_max));
  if (n_angular <= 2 * kmax_abs) {
    std::ostringstream msg;
    msg << "angular_coefficients: aliasing guard requires n_angular > " << 2 * kmax_abs
        << ", got " << n_angular;
    throw DomainError(msg.str());
  }
  const RadialRule rule = angular_rule(n_angular);
  std::vector<std::complex<double>> values(n_angular);
  for (int j = 0; j < n_angular; ++j) {
    values[j] = f(std::polar(r, rule.nodes()[j]));
    check_finite(values[j], "angular_coefficients");
  }
  std::map<int, std::complex<double>> out;
  std::vector<std::complex<double>> twisted(n_angular);
  for (int k = k_min; k <= k_max; ++k) {
    for (int j = 0; j < n_angular; ++j) {
      twisted[j] = values[j] * std::polar(1.0, -k * rule.nodes()[j]);
    }
    out[k] = integrate_samples(rule, twisted);
  }
  return out;
}

// Second Bargmann transform

std::complex<double> bargmann2_apply(double alpha, double beta, const QuadrantFunction& phi,
                                     const BidiskPoint& zw, const QuadrantRule& rule) {
  if (!(std::abs(zw.u) < 1.0) || !(std::abs(zw.v) < 1.0)) {
    throw DomainError("bargmann2_apply: (z, w) must lie in the open bi-disk");
  }
  if (rule.kind() != RuleKind::quadrant || rule.params().alpha != alpha ||
      rule.params().beta != beta) {
    std::ostringstream msg;
    msg << "quadrature rule mismatch: expected a quadrant rule with alpha=" << alpha
        << ", beta=" << beta;
    throw DomainError(msg.str());
  }
  const std::complex<double> z = zw.u;
  const std::complex<double> w = zw.v;
  // The rule carries s^alpha t^beta e^{-s-t}; adding s + t to the kernel
  // exponent leaves exp(-s z/(1-z) - t w/(1-w)).
  const std::complex<double> cs = z / (1.0 - z);
  const std::complex<double> ct = w / (1.0 - w);
  std::vector<std::complex<double>> samples(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const QuadrantPoint& q = rule.nodes()[i];
    samples[i] = phi(q) * std::exp(-q.s * cs - q.t * ct);
  }
  const std::complex<double> prefactor =
      std::pow(1.0 - z, -alpha - 1.0) * std::pow(1.0 - w, -beta - 1.0);
  return prefactor * integrate_samples(rule, samples);
}

double bargmann2_laguerre_coefficient(double alpha, double beta, PolyIndex idx) {
  check_index(idx);
  using specfun::log_gamma;
  return std::exp(log_gamma(idx.m + alpha + 1.0) + log_gamma(idx.n + beta + 1.0) -
                  log_gamma(idx.m + 1.0) - log_gamma(idx.n + 1.0));
}

}  // namespace itofrft
