#pragma once

// Ito-Hermite (complex Hermite) polynomials
//
//   H^nu_{m,n}(z, zbar) = (-1)^{m+n} e^{nu z zbar} d^{m+n}/(dzbar^m dz^n) e^{-nu z zbar},
//
// their normalized versions psi^nu_{m,n}, which form an orthonormal basis of
// L^2(C; e^{-nu|z|^2} dlambda), and the zero circles of H^nu_{m,n}.

#include <complex>
#include <compare>
#include <span>
#include <vector>

namespace itofrft {

struct PolyIndex {
  int m = 0;
  int n = 0;
  auto operator<=>(const PolyIndex&) const = default;
};

/// Throws IndexCapError unless 0 <= m, n <= kDegreeCap.
void check_index(PolyIndex idx);

struct ScaledPoint {
  double nu = 1.0;
  std::complex<double> z;
};

/// Zero locus of H^nu_{m,n}: a union of circles |z| = r plus, when m != n,
/// the origin.
struct ZeroSet {
  PolyIndex index;
  std::vector<double> radii;  // strictly increasing
  bool includes_origin = false;
};

/// H^nu_{m,n}(z, zbar), defined by H_{m+1,n} = nu z H_{m,n} - n nu H_{m,n-1},
/// H_{0,n} = (nu zbar)^n. Evaluated along the diagonal m - n = const (a
/// Laguerre recurrence in nu|z|^2), which stays accurate at high degree where
/// the defining recurrence cancels. Raw values overflow for large degrees;
/// prefer psi() there.
std::complex<double> hermite_ito(const ScaledPoint& p, PolyIndex idx);

/// psi^nu_{m,n} = (nu / (pi nu^{m+n} m! n!))^{1/2} H^nu_{m,n}, evaluated with
/// the normalized diagonal recurrence so that no factorial is ever formed.
std::complex<double> psi(const ScaledPoint& p, PolyIndex idx);

/// All psi^nu_{m,n}(z) for m <= max_m, n <= max_n at a set of points.
/// Backed by the simd::psi_table kernel.
class PsiGrid {
 public:
  PsiGrid(double nu, std::span<const std::complex<double>> points, int max_m, int max_n);

  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }
  std::size_t num_points() const noexcept { return num_points_; }

  /// psi_{m,n} sampled at every point, in point order.
  std::span<const std::complex<double>> values(PolyIndex idx) const;
  std::complex<double> at(PolyIndex idx, std::size_t point) const { return values(idx)[point]; }

 private:
  int max_m_;
  int max_n_;
  std::size_t num_points_;
  std::vector<std::complex<double>> table_;
};

/// Radii of the zero circles: r_j = (x_j / nu)^{1/2} over the roots x_j of
/// L_{min(m,n)}^{(|m-n|)}, using H_{m,n} = (-1)^n n! nu^m z^{m-n} L_n^{(m-n)}(nu|z|^2)
/// for m >= n.
ZeroSet zero_radii(double nu, PolyIndex idx);

/// All (m, n) in the box [0, max_m] x [0, max_n] with |psi^nu_{m,n}(w)| < tol.
/// The test is applied to psi rather than H so that tol is scale-free.
std::vector<PolyIndex> null_index_set(double nu, std::complex<double> w, int max_m, int max_n,
                                      double tol);

}  // namespace itofrft
