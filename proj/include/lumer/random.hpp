// Seeded draws for the randomized experiments.  Box-Muller over a
// mt19937_64 stream keeps the sequence identical across platforms, which
// the byte-reproducible experiment outputs rely on.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lumer/fft.hpp"
#include "lumer/trig_series.hpp"

namespace lumer {

class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1) with 53 random bits
  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    spare_ = m * std::sin(2.0 * pi * u2);
    have_spare_ = true;
    return m * std::cos(2.0 * pi * u2);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Random real trigonometric polynomial: cosine and sine coefficients of
// every mode up to degree_cap drawn independent standard normal.
inline TrigSeries random_real_trig_poly(std::size_t n_samples, int degree_cap,
                                        GaussianSampler& g) {
  if (degree_cap < 0 || 2 * degree_cap >= int(n_samples))
    throw std::invalid_argument("random_real_trig_poly: degree cap must fit below N/2");
  TrigSeries s(n_samples);
  s.set_coeff(0, g());
  for (int m = 1; m <= degree_cap; ++m) {
    const double a = g(), b = g();  // u += a cos(m t) + b sin(m t)
    s.set_coeff(m, cplx(a / 2.0, -b / 2.0));
    s.set_coeff(-m, cplx(a / 2.0, b / 2.0));
  }
  return s;
}

}  // namespace lumer
