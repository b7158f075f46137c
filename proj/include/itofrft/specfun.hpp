#pragma once

// Scalar special functions: log-gamma, modified Bessel I, generalized
// Laguerre and physicists' Hermite polynomials. All functions are pure.

namespace itofrft {

/// Upper bound on every polynomial degree accepted by the library.
inline constexpr int kDegreeCap = 200;

/// Non-negative, finite order of a Bessel function or Laguerre polynomial.
class RealOrder {
 public:
  explicit RealOrder(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

namespace specfun {

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
/// Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Modified Bessel function I_order(x) from its power series. Summation
/// stops once the next term falls below 1e-16 of the partial sum; more than
/// 500 terms raises ConvergenceError.
double bessel_i(RealOrder order, double x);

/// Generalized Laguerre polynomial L_n^{(order)}(x) by the three-term
/// recurrence in n.
double laguerre(int n, RealOrder order, double x);

/// Physicists' Hermite polynomial H_n(x), H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_real(int n, double x);

/// hermite_real in any floating type with + - * (long double, __float128).
/// Degree checks are the caller's job.
template <class Real>
Real hermite_real_t(int n, Real x) {
  if (n == 0) return Real(1);
  Real prev = Real(1);
  Real cur = Real(2) * x;
  for (int k = 1; k < n; ++k) {
    const Real next = Real(2) * x * cur - Real(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace specfun
}  // namespace itofrft
