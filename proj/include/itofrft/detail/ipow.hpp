#pragma once

#include <complex>

namespace itofrft::detail {

// z^k for k >= 0 by binary powering; ipow(0, 0) == 1.
inline std::complex<double> ipow(std::complex<double> z, int k) {
  std::complex<double> result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

}  // namespace itofrft::detail
