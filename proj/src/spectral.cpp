#include "itofrft/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "itofrft/error.hpp"
#include "itofrft/quadrature.hpp"
#include "itofrft/specfun.hpp"

namespace itofrft {
namespace {

void check_nu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("nu must be finite and positive");
}

}  // namespace

double singular_value(double nu, const BergmanParams& bp, PolyIndex idx, std::complex<double> w) {
  check_nu(nu);
  bp.require_bounded_regime();
  check_index(idx);
  const double h = std::abs(hermite_ito({nu, w}, idx));
  if (h == 0.0) return 0.0;
  if (std::isfinite(h)) {
    using specfun::log_gamma;
    const double log_s2 = std::log(nu * std::numbers::pi) + log_gamma(bp.alpha() + 1.0) +
                          log_gamma(bp.beta() + 1.0) - (idx.m + idx.n) * std::log(nu) -
                          log_gamma(bp.alpha() + idx.m + 2.0) - log_gamma(bp.beta() + idx.n + 2.0);
    return std::exp(0.5 * log_s2) * h;
  }
  return std::abs(psi({nu, w}, idx)) * std::exp(0.5 * log_gamma_norm(bp, idx));
}

double singular_value_bound(double nu, const BergmanParams& bp, PolyIndex idx,
                            std::complex<double> w) {
  check_nu(nu);
  return std::exp(0.5 * nu * std::norm(w) + 0.5 * log_gamma_norm(bp, idx));
}

Spectrum::Spectrum(double nu, BergmanParams bp, std::complex<double> w, int max_m, int max_n,
                   std::vector<double> values)
    : nu_(nu), bp_(bp), w_(w), max_m_(max_m), max_n_(max_n), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(max_m + 1) * (max_n + 1)) {
    throw DomainError("Spectrum: value count does not match the cutoff box");
  }
  for (double s : values_) {
    if (!(s >= 0.0)) throw DomainError("Spectrum: singular values must be non-negative");
  }
}

double Spectrum::at(PolyIndex idx) const {
  if (idx.m < 0 || idx.n < 0 || idx.m > max_m_ || idx.n > max_n_) {
    throw IndexCapError("Spectrum: index outside the cutoff box");
  }
  return values_[static_cast<std::size_t>(idx.m) * (max_n_ + 1) + idx.n];
}

std::vector<SpectrumEntry> Spectrum::entries() const {
  std::vector<SpectrumEntry> out;
  out.reserve(values_.size());
  for (int m = 0; m <= max_m_; ++m) {
    for (int n = 0; n <= max_n_; ++n) out.push_back({{m, n}, at({m, n})});
  }
  return out;
}

std::vector<SpectrumEntry> Spectrum::sorted() const {
  std::vector<SpectrumEntry> out = entries();
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value > b.value; });
  return out;
}

double Spectrum::antidiagonal_max(int total) const {
  double best = 0.0;
  for (int m = std::max(0, total - max_n_); m <= std::min(total, max_m_); ++m) {
    best = std::max(best, at({m, total - m}));
  }
  return best;
}

Spectrum spectrum(double nu, const BergmanParams& bp, std::complex<double> w, int max_m,
                  int max_n) {
  check_nu(nu);
  bp.require_bounded_regime();
  check_index({max_m, max_n});
  const std::complex<double> pt[1] = {w};
  const PsiGrid grid(nu, pt, max_m, max_n);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(max_m + 1) * (max_n + 1));
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      // Same quantity as singular_value(), assembled from the batched table.
      values.push_back(std::abs(grid.at({m, n}, 0)) * std::exp(0.5 * log_gamma_norm(bp, {m, n})));
    }
  }
  return Spectrum(nu, bp, w, max_m, max_n, std::move(values));
}

double schatten_partial(const Spectrum& spec, double p) {
  return schatten_partial(spec, p, std::max(spec.max_m(), spec.max_n()));
}

double schatten_partial(const Spectrum& spec, double p, int cutoff) {
  if (!(p > 0.0)) throw DomainError("schatten_partial: p must be positive");
  if (spec.empty()) return 0.0;
  double sum = 0.0;
  for (int m = 0; m <= std::min(cutoff, spec.max_m()); ++m) {
    for (int n = 0; n <= std::min(cutoff, spec.max_n()); ++n) {
      const double s = spec.at({m, n});
      if (s > 0.0) sum += std::pow(s, p);
    }
  }
  return sum;
}

KwBracket kw_constant(double nu, const BergmanParams& bp, std::complex<double> w, int n_nodes) {
  check_nu(nu);
  bp.require_bounded_regime();
  const RadialRule rs = gauss_jacobi_unit(n_nodes, bp.alpha());
  const RadialRule rt = gauss_jacobi_unit(n_nodes, bp.beta());
  const double w2 = std::norm(w);
  double sum = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double s = rs.nodes()[i];
    double row = 0.0;
    for (std::size_t j = 0; j < rt.size(); ++j) {
      const double t = rt.nodes()[j];
      const double one_minus_st = 1.0 - s * t;
      row += rt.weights()[j] * std::exp(nu * (s + t - 2.0 * s * t) * w2 / one_minus_st) /
             one_minus_st;
    }
    sum += rs.weights()[i] * row;
  }
  const double a = bp.alpha();
  const double b = bp.beta();
  KwBracket out;
  out.value = nu * std::numbers::pi * sum;
  out.lower = nu * std::numbers::pi / ((a + 1.0) * (b + 1.0));
  out.upper = nu * std::numbers::pi * std::exp(nu * w2) / (a * b);
  return out;
}

double operator_norm_bound(double nu, const BergmanParams& bp, std::complex<double> w,
                           int n_nodes) {
  return std::sqrt(kw_constant(nu, bp, w, n_nodes).value);
}

double finite_rank_tail(double nu, const BergmanParams& bp, std::complex<double> w, int p_cut,
                        int q_cut) {
  check_nu(nu);
  bp.require_bounded_regime();
  if (p_cut < 0 || q_cut < 0) throw DomainError("finite_rank_tail: cuts must be non-negative");
  // gamma_{m,n} = pi^2 a_m b_n factorizes, so the double tail is a product.
  const auto axis_tail = [](double e, int cut) {
    using specfun::log_gamma;
    double sum = 0.0;
    for (int k = cut + 1; k <= kDegreeCap; ++k) {
      sum += std::exp(log_gamma(e + 1.0) + log_gamma(k + 1.0) - log_gamma(e + k + 2.0));
    }
    return sum;
  };
  return std::exp(nu * std::norm(w)) * std::numbers::pi * std::numbers::pi *
         axis_tail(bp.alpha(), p_cut) * axis_tail(bp.beta(), q_cut);
}

}  // namespace itofrft
