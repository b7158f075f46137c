#include "itofrft/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "itofrft/bergman.hpp"
#include "itofrft/error.hpp"
#include "itofrft/ito_hermite.hpp"

namespace itofrft {
namespace {

std::complex<double> guarded_exp(std::complex<double> exponent, const char* what) {
  if (!(exponent.real() <= kExponentGuard)) {
    std::ostringstream msg;
    msg << what << ": exponent real part " << exponent.real() << " exceeds the overflow guard "
        << kExponentGuard;
    throw NonFiniteError(msg.str());
  }
  return std::exp(exponent);
}

void check_disk(std::complex<double> x, const char* what) {
  if (!(std::abs(x) < 1.0)) {
    std::ostringstream msg;
    msg << what << ": argument " << x << " is outside the open unit disk";
    throw DomainError(msg.str());
  }
}

}  // namespace

TransformParams::TransformParams(double nu, std::complex<double> u, std::complex<double> v)
    : nu_(nu), u_(u), v_(v) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError("TransformParams: nu must be positive");
  check_disk(u, "TransformParams (u)");
  check_disk(v, "TransformParams (v)");
}

std::complex<double> mehler_closed(const TransformParams& p, std::complex<double> z,
                                   std::complex<double> w) {
  const double nu = p.nu();
  const std::complex<double> uv = p.u() * p.v();
  const std::complex<double> denom = 1.0 - uv;
  const std::complex<double> exponent =
      (-uv * nu * (std::norm(z) + std::norm(w)) + nu * p.u() * z * w +
       nu * p.v() * std::conj(z) * std::conj(w)) /
      denom;
  return guarded_exp(exponent, "mehler_closed") / denom;
}

std::complex<double> mehler_series(const TransformParams& p, std::complex<double> z,
                                   std::complex<double> w, int trunc) {
  if (trunc < 0) throw DomainError("mehler_series: trunc must be non-negative");
  const std::complex<double> pts[2] = {z, w};
  const PsiGrid grid(p.nu(), pts, trunc, trunc);
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> um{1.0, 0.0};
  for (int m = 0; m <= trunc; ++m) {
    std::complex<double> term_v{1.0, 0.0};
    for (int n = 0; n <= trunc; ++n) {
      sum += um * term_v * grid.at({m, n}, 0) * grid.at({m, n}, 1);
      term_v *= p.v();
    }
    um *= p.u();
  }
  return sum;
}

std::complex<double> frft_kernel(const TransformParams& p, std::complex<double> zeta,
                                 std::complex<double> xi) {
  const double nu = p.nu();
  const std::complex<double> uv = p.u() * p.v();
  const std::complex<double> denom = 1.0 - uv;
  const std::complex<double> exponent =
      nu * (-uv * (std::norm(zeta) + std::norm(xi)) + p.u() * std::conj(zeta) * xi +
            p.v() * zeta * std::conj(xi)) /
      denom;
  return nu / (std::numbers::pi * denom) * guarded_exp(exponent, "frft_kernel");
}

std::complex<double> bergman_kernel(double alpha, double beta, const BidiskPoint& a,
                                    const BidiskPoint& b) {
  const BergmanParams bp(alpha, beta);
  check_disk(a.u, "bergman_kernel");
  check_disk(a.v, "bergman_kernel");
  check_disk(b.u, "bergman_kernel");
  check_disk(b.v, "bergman_kernel");
  const std::complex<double> bu = 1.0 - a.u * std::conj(b.u);
  const std::complex<double> bv = 1.0 - a.v * std::conj(b.v);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return (alpha + 1.0) * (beta + 1.0) /
         (pi2 * std::pow(bu, alpha + 2.0) * std::pow(bv, beta + 2.0));
}

std::complex<double> gram_kernel(double nu, double alpha, double beta, std::complex<double> w,
                                 std::complex<double> zeta, std::complex<double> z, int trunc) {
  if (trunc < 0) throw DomainError("gram_kernel: trunc must be non-negative");
  const BergmanParams bp(alpha, beta);
  const std::complex<double> pts[3] = {w, zeta, z};
  const PsiGrid grid(nu, pts, trunc, trunc);
  std::complex<double> sum{0.0, 0.0};
  for (int m = 0; m <= trunc; ++m) {
    for (int n = 0; n <= trunc; ++n) {
      const PolyIndex idx{m, n};
      const double c2 = std::norm(grid.at(idx, 0)) * gamma_norm(bp, idx);
      sum += c2 * grid.at(idx, 2) * std::conj(grid.at(idx, 1));
    }
  }
  return sum;
}

}  // namespace itofrft
