#include "itofrft/bergman.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "itofrft/detail/ipow.hpp"
#include "itofrft/error.hpp"
#include "itofrft/specfun.hpp"

namespace itofrft {

BergmanParams::BergmanParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    std::ostringstream msg;
    msg << "Bergman weight exponents must satisfy alpha > -1 and beta > -1 (got alpha=" << alpha
        << ", beta=" << beta << ")";
    throw DomainError(msg.str());
  }
}

void BergmanParams::require_bounded_regime() const {
  if (!bounded_regime()) {
    std::ostringstream msg;
    msg << "operation requires alpha > 0 and beta > 0 (got alpha=" << alpha_ << ", beta=" << beta_
        << ")";
    throw DomainError(msg.str());
  }
}

double log_gamma_norm(const BergmanParams& bp, PolyIndex idx) {
  check_index(idx);
  using specfun::log_gamma;
  const double a = bp.alpha();
  const double b = bp.beta();
  return 2.0 * std::log(std::numbers::pi) + log_gamma(a + 1.0) + log_gamma(b + 1.0) +
         log_gamma(idx.m + 1.0) + log_gamma(idx.n + 1.0) - log_gamma(a + idx.m + 2.0) -
         log_gamma(b + idx.n + 2.0);
}

double gamma_norm(const BergmanParams& bp, PolyIndex idx) {
  return std::exp(log_gamma_norm(bp, idx));
}

std::complex<double> bergman_basis(const BergmanParams& bp, PolyIndex idx, std::complex<double> u,
                                   std::complex<double> v) {
  return detail::ipow(u, idx.m) * detail::ipow(v, idx.n) * std::exp(-0.5 * log_gamma_norm(bp, idx));
}

}  // namespace itofrft
