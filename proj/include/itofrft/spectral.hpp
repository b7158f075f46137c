#pragma once

// Spectral data of the dual transform R^nu_w : L^2_nu(C) -> B^2_{alpha,beta}(D^2):
// closed-form singular values, Schatten partial sums, the boundedness
// constant k_w with its analytic bracket, and the finite-rank tail bound.

#include <complex>
#include <vector>

#include "itofrft/bergman.hpp"
#include "itofrft/ito_hermite.hpp"

namespace itofrft {

/// s_{m,n}(w) = (nu pi Gamma(alpha+1) Gamma(beta+1) / (nu^{m+n} Gamma(alpha+m+2) Gamma(beta+n+2)))^{1/2}
///              |H^nu_{m,n}(w, wbar)|
/// Falls back to |psi_{m,n}(w)| gamma_{m,n}^{1/2} when the raw polynomial
/// overflows. Requires alpha, beta > 0.
double singular_value(double nu, const BergmanParams& bp, PolyIndex idx, std::complex<double> w);

/// Right-hand side of the pointwise estimate
///   s_{m,n}(w) <= pi e^{nu|w|^2/2} (m! n! Gamma(alpha+1) Gamma(beta+1)
///                                   / (Gamma(m+alpha+2) Gamma(n+beta+2)))^{1/2}.
double singular_value_bound(double nu, const BergmanParams& bp, PolyIndex idx,
                            std::complex<double> w);

struct SpectrumEntry {
  PolyIndex index;
  double value = 0.0;
};

/// Singular values over the index box [0, max_m] x [0, max_n].
class Spectrum {
 public:
  Spectrum(double nu, BergmanParams bp, std::complex<double> w, int max_m, int max_n,
           std::vector<double> values);

  double nu() const noexcept { return nu_; }
  const BergmanParams& bergman() const noexcept { return bp_; }
  std::complex<double> w() const noexcept { return w_; }
  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }
  bool empty() const noexcept { return values_.empty(); }

  /// Throws IndexCapError outside the cutoff box.
  double at(PolyIndex idx) const;

  /// Entries in row-major (m, then n) order.
  std::vector<SpectrumEntry> entries() const;

  /// Entries by decreasing value; ties broken by (m, n).
  std::vector<SpectrumEntry> sorted() const;

  /// Largest s_{m,n} with m + n == total (0 if the diagonal misses the box).
  double antidiagonal_max(int total) const;

 private:
  double nu_;
  BergmanParams bp_;
  std::complex<double> w_;
  int max_m_;
  int max_n_;
  std::vector<double> values_;
};

Spectrum spectrum(double nu, const BergmanParams& bp, std::complex<double> w, int max_m,
                  int max_n);

/// sum over the box of s_{m,n}^p.
double schatten_partial(const Spectrum& spec, double p);

/// sum over m, n <= cutoff (clipped to the spectrum box) of s_{m,n}^p.
double schatten_partial(const Spectrum& spec, double p, int cutoff);

struct KwBracket {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// k_w = nu pi int_0^1 int_0^1 exp(nu (s+t-2st) |w|^2 / (1-st)) (1-s)^alpha (1-t)^beta / (1-st) ds dt
/// by tensor Gauss-Jacobi (n_nodes per axis), with the bracket
/// [nu pi / ((alpha+1)(beta+1)), nu pi e^{nu|w|^2} / (alpha beta)].
KwBracket kw_constant(double nu, const BergmanParams& bp, std::complex<double> w,
                      int n_nodes = 128);

/// k_w^{1/2}, an upper bound for ||R^nu_w||.
double operator_norm_bound(double nu, const BergmanParams& bp, std::complex<double> w,
                           int n_nodes = 128);

/// e^{nu|w|^2} sum_{p_cut < m <= cap} sum_{q_cut < n <= cap} gamma_{m,n},
/// cap = kDegreeCap.
double finite_rank_tail(double nu, const BergmanParams& bp, std::complex<double> w, int p_cut,
                        int q_cut);

}  // namespace itofrft
