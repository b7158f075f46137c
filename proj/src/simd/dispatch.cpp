#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "itofrft/error.hpp"
#include "itofrft/simd.hpp"

namespace itofrft::simd {
namespace {

Backend detect() noexcept {
  if (const char* forced = std::getenv("ITOFRFT_SIMD");
      forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return Backend::scalar;
  }
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

void require_size(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("simd::") + what + ": span size mismatch");
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept {
#if defined(ITOFRFT_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) {
    throw DomainError("simd: AVX2 backend not available on this build or CPU");
  }
  current().store(b, std::memory_order_relaxed);
}

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f) {
  require_size(w.size() == f.size(), "weighted_sum");
#if defined(ITOFRFT_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::weighted_sum(w, f);
#endif
  return scalar::weighted_sum(w, f);
}

std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b) {
  require_size(a.size() == b.size(), "dot");
#if defined(ITOFRFT_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::dot(a, b);
#endif
  return scalar::dot(a, b);
}

void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out) {
  require_size(max_m >= 0 && max_n >= 0 &&
                   out.size() == static_cast<std::size_t>(max_m + 1) * (max_n + 1) * z.size(),
               "psi_table");
#if defined(ITOFRFT_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::psi_table(nu, z, max_m, max_n, out);
#endif
  scalar::psi_table(nu, z, max_m, max_n, out);
}

#if !defined(ITOFRFT_HAVE_AVX2)
// Without the AVX2 translation unit the variant names still link and fall
// back to the reference code, so equivalence tests compile everywhere.
namespace avx2 {
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f) {
  return scalar::weighted_sum(w, f);
}
std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b) {
  return scalar::dot(a, b);
}
void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out) {
  scalar::psi_table(nu, z, max_m, max_n, out);
}
}  // namespace avx2
#endif

}  // namespace itofrft::simd
