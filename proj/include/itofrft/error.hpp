#pragma once

#include <stdexcept>
#include <string>

namespace itofrft {

// Argument outside the mathematical domain of an operation (x <= 0 for
// log_gamma, |u| >= 1 for a kernel parameter, alpha <= 0 where boundedness
// is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A polynomial index beyond the supported degree cap.
class IndexCapError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative evaluation hit its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An integrand or kernel produced inf/nan (or an exponent beyond the
// overflow guard).
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace itofrft
