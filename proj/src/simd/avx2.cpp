// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "itofrft/simd.hpp"

namespace itofrft::simd::avx2 {
namespace {

inline const double* as_doubles(const std::complex<double>* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(std::complex<double>* p) { return reinterpret_cast<double*>(p); }

// (ar + i ai)(br + i bi) for two interleaved complex pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline std::complex<double> hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

}  // namespace

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f) {
  const std::size_t n = w.size();
  const double* fd = as_doubles(f.data());
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w4 = _mm256_loadu_pd(w.data() + i);
    const __m256d w01 = _mm256_permute4x64_pd(w4, 0x50);  // w0 w0 w1 w1
    const __m256d w23 = _mm256_permute4x64_pd(w4, 0xFA);  // w2 w2 w3 w3
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(fd + 2 * i), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(fd + 2 * i + 4), acc1);
  }
  std::complex<double> total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += w[i] * f[i];
  return total;
}

std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b) {
  const std::size_t n = a.size();
  const double* ad = as_doubles(a.data());
  const double* bd = as_doubles(b.data());
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ad + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    acc_re = _mm256_fmadd_pd(av, _mm256_movedup_pd(bv), acc_re);
    acc_im = _mm256_fmadd_pd(_mm256_permute_pd(av, 0x5), _mm256_permute_pd(bv, 0xF), acc_im);
  }
  std::complex<double> total = hsum(_mm256_addsub_pd(acc_re, acc_im));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out) {
  const std::size_t npts = z.size();
  const auto slot = [&](int m, int n) {
    return out.data() + (static_cast<std::size_t>(m) * (max_n + 1) + n) * npts;
  };
  const double* zd = as_doubles(z.data());
  const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);

  const double c00 = std::sqrt(nu / std::numbers::pi);
  std::complex<double>* first = slot(0, 0);
  for (std::size_t i = 0; i < npts; ++i) first[i] = c00;

  for (int n = 0; n < max_n; ++n) {
    const double a = std::sqrt(nu / (n + 1.0));
    const __m256d av = _mm256_set1_pd(a);
    const double* src = as_doubles(slot(0, n));
    double* dst = as_doubles(slot(0, n + 1));
    std::size_t i = 0;
    for (; i + 2 <= npts; i += 2) {
      const __m256d zc = _mm256_xor_pd(_mm256_loadu_pd(zd + 2 * i), conj_mask);
      const __m256d p = cmul(zc, _mm256_loadu_pd(src + 2 * i));
      _mm256_storeu_pd(dst + 2 * i, _mm256_mul_pd(av, p));
    }
    for (; i < npts; ++i) slot(0, n + 1)[i] = a * std::conj(z[i]) * slot(0, n)[i];
  }

  for (int m = 0; m < max_m; ++m) {
    const double a = std::sqrt(nu / (m + 1.0));
    const __m256d av = _mm256_set1_pd(a);
    const double* src = as_doubles(slot(m, 0));
    double* dst = as_doubles(slot(m + 1, 0));
    std::size_t i = 0;
    for (; i + 2 <= npts; i += 2) {
      _mm256_storeu_pd(dst + 2 * i, _mm256_mul_pd(av, cmul(_mm256_loadu_pd(zd + 2 * i), _mm256_loadu_pd(src + 2 * i))));
    }
    for (; i < npts; ++i) slot(m + 1, 0)[i] = a * z[i] * slot(m, 0)[i];
  }

  // Diagonal Laguerre recurrence, see the scalar variant. x is stored twice
  // per point so it lines up with interleaved (re, im).
  std::vector<double> x2(2 * npts);
  for (std::size_t i = 0; i < npts; ++i) x2[2 * i] = x2[2 * i + 1] = nu * std::norm(z[i]);
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const double e = 1.0 / std::sqrt(static_cast<double>(m) * n);
      const double c = m + n - 1.0;
      const double f = (m > 1 && n > 1) ? std::sqrt((m - 1.0) * (n - 1.0)) * e : 0.0;
      const __m256d ev = _mm256_set1_pd(e), cv = _mm256_set1_pd(c), fv = _mm256_set1_pd(f);
      const double* p1 = as_doubles(slot(m - 1, n - 1));
      const double* p2 = f != 0.0 ? as_doubles(slot(m - 2, n - 2)) : nullptr;
      double* dst = as_doubles(slot(m, n));
      std::size_t i = 0;
      for (; i + 2 <= npts; i += 2) {
        const __m256d t = _mm256_mul_pd(_mm256_mul_pd(ev, _mm256_sub_pd(_mm256_loadu_pd(x2.data() + 2 * i), cv)),
                                        _mm256_loadu_pd(p1 + 2 * i));
        _mm256_storeu_pd(dst + 2 * i, p2 ? _mm256_fnmadd_pd(fv, _mm256_loadu_pd(p2 + 2 * i), t) : t);
      }
      for (; i < npts; ++i) {
        std::complex<double> v = e * (x2[2 * i] - c) * slot(m - 1, n - 1)[i];
        if (p2) v -= f * slot(m - 2, n - 2)[i];
        slot(m, n)[i] = v;
      }
    }
  }
}

}  // namespace itofrft::simd::avx2
