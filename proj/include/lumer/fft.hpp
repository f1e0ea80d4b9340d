// Radix-2 complex FFT for power-of-two sizes.  Twiddles come from a
// per-call std::polar table rather than the multiplicative recurrence, so
// round-trip error stays near machine precision even at 2^16 points.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lumer {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place transform: sign = -1 computes X_k = sum_j x_j e^{-2pi i jk/N}
// (forward DFT), sign = +1 the unnormalized inverse.  Neither divides by N.
inline void fft_inplace(std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  std::vector<cplx> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, sign * 2.0 * pi * double(k) / double(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = x[i + k];
        const cplx v = x[i + k + len / 2] * tw[k * stride];
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace lumer
