#include <cmath>
#include <numbers>
#include <vector>

#include "itofrft/simd.hpp"

namespace itofrft::simd::scalar {

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out) {
  const std::size_t npts = z.size();
  const auto slot = [&](int m, int n) {
    return out.subspan((static_cast<std::size_t>(m) * (max_n + 1) + n) * npts, npts);
  };

  const double c00 = std::sqrt(nu / std::numbers::pi);
  auto first = slot(0, 0);
  for (std::size_t i = 0; i < npts; ++i) first[i] = c00;

  // psi_{0,n+1} = sqrt(nu/(n+1)) conj(z) psi_{0,n}
  for (int n = 0; n < max_n; ++n) {
    const double a = std::sqrt(nu / (n + 1.0));
    auto src = slot(0, n);
    auto dst = slot(0, n + 1);
    for (std::size_t i = 0; i < npts; ++i) dst[i] = a * std::conj(z[i]) * src[i];
  }

  // psi_{m+1,0} = sqrt(nu/(m+1)) z psi_{m,0}
  for (int m = 0; m < max_m; ++m) {
    const double a = std::sqrt(nu / (m + 1.0));
    auto src = slot(m, 0);
    auto dst = slot(m + 1, 0);
    for (std::size_t i = 0; i < npts; ++i) dst[i] = a * z[i] * src[i];
  }

  // Interior entries step along the diagonal m - n = const, which is the
  // (stable) Laguerre recurrence in x = nu |z|^2:
  // sqrt(mn) psi_{m,n} = (x - (m+n-1)) psi_{m-1,n-1} - sqrt((m-1)(n-1)) psi_{m-2,n-2}
  std::vector<double> x(npts);
  for (std::size_t i = 0; i < npts; ++i) x[i] = nu * std::norm(z[i]);
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const double e = 1.0 / std::sqrt(static_cast<double>(m) * n);
      const double c = m + n - 1.0;
      auto p1 = slot(m - 1, n - 1);
      auto dst = slot(m, n);
      if (m == 1 || n == 1) {
        for (std::size_t i = 0; i < npts; ++i) dst[i] = e * (x[i] - c) * p1[i];
      } else {
        const double f = std::sqrt((m - 1.0) * (n - 1.0)) * e;
        auto p2 = slot(m - 2, n - 2);
        for (std::size_t i = 0; i < npts; ++i) dst[i] = e * (x[i] - c) * p1[i] - f * p2[i];
      }
    }
  }
}

}  // namespace itofrft::simd::scalar
