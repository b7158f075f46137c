#include "itofrft/ito_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "itofrft/error.hpp"
#include "itofrft/quadrature.hpp"
#include "itofrft/simd.hpp"
#include "itofrft/specfun.hpp"

namespace itofrft {
namespace {

void check_nu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError("nu must be finite and strictly positive");
  }
}

}  // namespace

void check_index(PolyIndex idx) {
  if (idx.m < 0 || idx.n < 0) {
    throw IndexCapError("polynomial index (" + std::to_string(idx.m) + "," +
                        std::to_string(idx.n) + ") is negative");
  }
  if (idx.m > kDegreeCap || idx.n > kDegreeCap) {
    throw IndexCapError("polynomial index (" + std::to_string(idx.m) + "," +
                        std::to_string(idx.n) + ") exceeds the degree cap of 200");
  }
}

std::complex<double> hermite_ito(const ScaledPoint& p, PolyIndex idx) {
  check_nu(p.nu);
  check_index(idx);
  // Seed H_{k,0} = (nu z)^k or H_{0,k} = (nu zbar)^k, then walk the diagonal:
  // H_{m,n} = nu (x - (m+n-1)) H_{m-1,n-1} - nu^2 (m-1)(n-1) H_{m-2,n-2}.
  // The direct recurrence in m cancels badly for large degrees.
  const int k = std::abs(idx.m - idx.n);
  const std::complex<double> g = p.nu * (idx.m >= idx.n ? p.z : std::conj(p.z));
  std::complex<double> cur = 1.0;
  for (int j = 0; j < k; ++j) cur *= g;
  const double x = p.nu * std::norm(p.z);
  std::complex<double> prev = 0.0;
  for (int j = 1; j <= std::min(idx.m, idx.n); ++j) {
    const double mm = j + k, nn = j;
    const std::complex<double> next =
        p.nu * (x - (mm + nn - 1.0)) * cur - p.nu * p.nu * (mm - 1.0) * (nn - 1.0) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::complex<double> psi(const ScaledPoint& p, PolyIndex idx) {
  check_nu(p.nu);
  check_index(idx);
  // Same diagonal walk, normalized:
  // sqrt(mn) psi_{m,n} = (x - (m+n-1)) psi_{m-1,n-1} - sqrt((m-1)(n-1)) psi_{m-2,n-2}
  const int k = std::abs(idx.m - idx.n);
  const std::complex<double> g = idx.m >= idx.n ? p.z : std::conj(p.z);
  std::complex<double> cur = std::sqrt(p.nu / std::numbers::pi);
  for (int j = 1; j <= k; ++j) cur *= std::sqrt(p.nu / j) * g;
  const double x = p.nu * std::norm(p.z);
  std::complex<double> prev = 0.0;
  for (int j = 1; j <= std::min(idx.m, idx.n); ++j) {
    const double mm = j + k, nn = j;
    const std::complex<double> next =
        ((x - (mm + nn - 1.0)) * cur - std::sqrt((mm - 1.0) * (nn - 1.0)) * prev) / std::sqrt(mm * nn);
    prev = cur;
    cur = next;
  }
  return cur;
}

PsiGrid::PsiGrid(double nu, std::span<const std::complex<double>> points, int max_m, int max_n)
    : max_m_(max_m), max_n_(max_n), num_points_(points.size()) {
  check_nu(nu);
  check_index({max_m, max_n});
  table_.resize(static_cast<std::size_t>(max_m + 1) * (max_n + 1) * num_points_);
  simd::psi_table(nu, points, max_m, max_n, table_);
}

std::span<const std::complex<double>> PsiGrid::values(PolyIndex idx) const {
  if (idx.m < 0 || idx.n < 0 || idx.m > max_m_ || idx.n > max_n_) {
    throw IndexCapError("PsiGrid: index outside the tabulated box");
  }
  const std::size_t offset = (static_cast<std::size_t>(idx.m) * (max_n_ + 1) + idx.n) * num_points_;
  return std::span<const std::complex<double>>(table_).subspan(offset, num_points_);
}

ZeroSet zero_radii(double nu, PolyIndex idx) {
  check_nu(nu);
  check_index(idx);
  ZeroSet zs;
  zs.index = idx;
  zs.includes_origin = idx.m != idx.n;
  const int degree = std::min(idx.m, idx.n);
  const int order = std::abs(idx.m - idx.n);
  if (degree == 0) return zs;
  for (double x : laguerre_roots(degree, order)) zs.radii.push_back(std::sqrt(x / nu));
  return zs;
}

std::vector<PolyIndex> null_index_set(double nu, std::complex<double> w, int max_m, int max_n,
                                      double tol) {
  if (!(tol > 0.0)) throw DomainError("null_index_set: tol must be positive");
  check_nu(nu);
  check_index({max_m, max_n});
  const std::complex<double> point[1] = {w};
  const PsiGrid grid(nu, point, max_m, max_n);
  std::vector<PolyIndex> out;
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      if (std::abs(grid.at({m, n}, 0)) < tol) out.push_back({m, n});
    }
  }
  return out;
}

}  // namespace itofrft
