#pragma once

// Data-parallel inner loops shared by every quadrature in the library.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant compiled in its own translation unit. The variant is
// chosen once at runtime from CPUID; ITOFRFT_SIMD=scalar in the environment
// forces the reference path. Both variants are equivalence-tested.

#include <complex>
#include <span>
#include <string_view>

namespace itofrft::simd {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;

/// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_available() noexcept;

Backend active_backend() noexcept;

/// Overrides the runtime choice (tests use this to compare variants).
/// Throws DomainError when the requested backend is unavailable.
void set_backend(Backend b);

/// sum_i w[i] * f[i]
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f);

/// sum_i a[i] * b[i], no conjugation.
std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b);

/// Normalized Ito-Hermite table psi^nu_{m,n}(z_i) for 0 <= m <= max_m,
/// 0 <= n <= max_n, written to out[(m * (max_n + 1) + n) * z.size() + i].
/// out.size() must be (max_m + 1) * (max_n + 1) * z.size().
void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out);

// Individual variants, exposed for equivalence tests.
namespace scalar {
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f);
std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b);
void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out);
}  // namespace scalar

namespace avx2 {
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const std::complex<double>> f);
std::complex<double> dot(std::span<const std::complex<double>> a,
                         std::span<const std::complex<double>> b);
void psi_table(double nu, std::span<const std::complex<double>> z, int max_m, int max_n,
               std::span<std::complex<double>> out);
}  // namespace avx2

}  // namespace itofrft::simd
