// Fourier analysis on the unit circle: trigonometric polynomials, Poisson
// extension into the disk, harmonic conjugation, and p-th integral means.
//
// A TrigSeries stores coefficients c_n for modes n in [-N/2, N/2) and
// represents
//
//     u(r e^{i theta}) = sum_n c_n r^|n| e^{i n theta},
//
// the harmonic extension of the boundary trigonometric polynomial.  The
// p-th integral mean over the circle of radius r,
//
//     M_p(u, r) = { (1/2pi) int |u(r e^{i theta})|^p d theta }^{1/p},
//
// is increasing in r, and for a finite series it is continuous up to r = 1,
// so the Hardy norm is evaluated directly on the boundary.  Quadrature is
// the uniform trapezoid rule on N nodes: spectrally exact for periodic
// integrands of bandwidth below N, refined by doubling N for fractional p.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lumer/fft.hpp"

namespace lumer {

// Node-doubling policy for boundary quadrature: refine until two successive
// values agree to `tol`, capped at `n_cap` nodes.
struct QuadPolicy {
  std::size_t n_start = 256;
  std::size_t n_cap = std::size_t{1} << 16;
  double tol = 1e-9;
};

namespace detail {
inline void require_sample_count(std::size_t n) {
  if (n < 8 || !is_pow2(n))
    throw std::invalid_argument("sample count must be a power of two >= 8");
}
}  // namespace detail

// Complex samples at the N uniform nodes theta_k = 2 pi k / N on the circle.
class BoundarySamples {
 public:
  explicit BoundarySamples(std::vector<cplx> values) : v_(std::move(values)) {
    detail::require_sample_count(v_.size());
  }

  static BoundarySamples collect(std::size_t n, const std::function<cplx(double)>& f) {
    detail::require_sample_count(n);
    std::vector<cplx> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = f(2.0 * pi * double(k) / double(n));
    return BoundarySamples(std::move(v));
  }

  std::size_t size() const { return v_.size(); }
  const std::vector<cplx>& values() const { return v_; }
  cplx operator[](std::size_t k) const { return v_[k]; }

 private:
  std::vector<cplx> v_;
};

// Finite Fourier series; coefficients live in FFT layout internally and are
// addressed by the signed mode index.
class TrigSeries {
 public:
  explicit TrigSeries(std::size_t n) : c_(n) { detail::require_sample_count(n); }

  std::size_t size() const { return c_.size(); }
  int min_mode() const { return -int(c_.size()) / 2; }
  int max_mode() const { return int(c_.size()) / 2 - 1; }

  cplx coeff(int n) const { return c_[slot(n)]; }
  void set_coeff(int n, cplx value) { c_[slot(n)] = value; }

  const std::vector<cplx>& raw() const { return c_; }
  std::vector<cplx>& raw() { return c_; }

  // Largest |n| carrying a nonzero coefficient; 0 for the zero series.
  int degree() const {
    int d = 0;
    for (int n = min_mode(); n <= max_mode(); ++n)
      if (std::abs(coeff(n)) != 0.0) d = std::max(d, std::abs(n));
    return d;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const cplx& c : c_) m = std::max(m, std::abs(c));
    return m;
  }

  // Deviation from the conjugate symmetry c_{-n} = conj(c_n) of a
  // real-valued function.  The unpaired mode -N/2 must be real.
  double conjugate_asymmetry() const {
    const int half = int(c_.size()) / 2;
    double worst = std::abs(std::imag(coeff(-half)));
    for (int n = 1; n < half; ++n)
      worst = std::max(worst, std::abs(coeff(-n) - std::conj(coeff(n))));
    worst = std::max(worst, std::abs(std::imag(coeff(0))));
    return worst;
  }

  bool is_real(double tol) const { return conjugate_asymmetry() <= tol; }

  // --- small constructors used throughout the tests and experiments ---

  static TrigSeries constant(std::size_t n, cplx c) {
    TrigSeries s(n);
    s.set_coeff(0, c);
    return s;
  }

  // cos(m theta) = boundary values of Re z^m
  static TrigSeries cosine(std::size_t n, int m, double amplitude = 1.0) {
    TrigSeries s(n);
    s.set_coeff(m, amplitude * 0.5);
    s.set_coeff(-m, amplitude * 0.5);
    return s;
  }

  // sin(m theta) = boundary values of Im z^m
  static TrigSeries sine(std::size_t n, int m, double amplitude = 1.0) {
    TrigSeries s(n);
    s.set_coeff(m, cplx(0.0, -0.5) * amplitude);
    s.set_coeff(-m, cplx(0.0, 0.5) * amplitude);
    return s;
  }

  // e^{i m theta} = boundary values of z^m (m >= 0)
  static TrigSeries monomial(std::size_t n, int m) {
    TrigSeries s(n);
    s.set_coeff(m, 1.0);
    return s;
  }

 private:
  std::size_t slot(int n) const {
    const int half = int(c_.size()) / 2;
    if (n < -half || n >= half) throw std::out_of_range("mode index out of range");
    return std::size_t((n + int(c_.size())) % int(c_.size()));
  }

  std::vector<cplx> c_;  // FFT layout: slot k holds mode k for k < N/2, k - N otherwise
};

// Tolerance for the real-valuedness test; above round-trip noise so smooth
// sampled data is not falsely rejected.
inline double real_tolerance(const TrigSeries& s) {
  return 1e-10 * std::max(1.0, s.max_abs_coeff());
}

inline void require_real(const TrigSeries& s, const char* where) {
  if (!s.is_real(real_tolerance(s)))
    throw std::domain_error(std::string(where) + ": series is not real-valued");
}

// Exact trigonometric interpolation of the samples.
inline TrigSeries analyze(const BoundarySamples& samples) {
  std::vector<cplx> c = samples.values();
  fft_inplace(c, -1);
  const double inv = 1.0 / double(c.size());
  for (cplx& x : c) x *= inv;
  TrigSeries s(samples.size());
  s.raw() = std::move(c);
  return s;
}

inline BoundarySamples synthesize(const TrigSeries& series) {
  std::vector<cplx> v = series.raw();
  fft_inplace(v, +1);
  return BoundarySamples(std::move(v));
}

// Values of the harmonic extension on the circle of radius r, resampled at
// n_nodes uniform nodes (n_nodes >= N, power of two).
inline std::vector<cplx> circle_values(const TrigSeries& series, double r,
                                       std::size_t n_nodes) {
  if (n_nodes < series.size() || !is_pow2(n_nodes))
    throw std::invalid_argument("circle_values: node count must be a power of two >= N");
  std::vector<cplx> c(n_nodes);
  for (int n = series.min_mode(); n <= series.max_mode(); ++n) {
    const cplx cn = series.coeff(n);
    if (cn == 0.0) continue;
    const double scale = (r == 1.0) ? 1.0 : std::pow(r, std::abs(n));
    c[std::size_t((n + int(n_nodes)) % int(n_nodes))] = cn * scale;
  }
  fft_inplace(c, +1);
  return c;
}

// Harmonic extension evaluated at r e^{i theta}; the mean-value property
// poisson_extend(s, 0, .) = c_0 holds exactly.
inline cplx poisson_extend(const TrigSeries& series, double r, double theta) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::domain_error("poisson_extend: r must lie in [0, 1)");
  cplx acc = 0.0;
  for (int n = series.min_mode(); n <= series.max_mode(); ++n) {
    const cplx cn = series.coeff(n);
    if (cn == 0.0) continue;
    acc += cn * std::pow(r, std::abs(n)) * std::polar(1.0, double(n) * theta);
  }
  return acc;
}

inline cplx boundary_value(const TrigSeries& series, double theta) {
  cplx acc = 0.0;
  for (int n = series.min_mode(); n <= series.max_mode(); ++n) {
    const cplx cn = series.coeff(n);
    if (cn == 0.0) continue;
    acc += cn * std::polar(1.0, double(n) * theta);
  }
  return acc;
}

inline cplx harmonic_at(const TrigSeries& series, cplx z) {
  return poisson_extend(series, std::abs(z), std::arg(z));
}

// Harmonic conjugate via the Fourier multiplier -i sgn(n), with the zero
// mode dropped so the conjugate vanishes at the origin.  The input must be
// real-valued; the unrepresentable Nyquist mode is dropped as well.
inline TrigSeries conjugate_series(const TrigSeries& series) {
  require_real(series, "conjugate_series");
  TrigSeries out(series.size());
  const int half = int(series.size()) / 2;
  for (int n = 1; n < half; ++n) {
    out.set_coeff(n, cplx(0.0, -1.0) * series.coeff(n));
    out.set_coeff(-n, cplx(0.0, 1.0) * series.coeff(-n));
  }
  return out;
}

namespace detail {

inline double mean_abs_p(const TrigSeries& series, double r, double p, std::size_t n) {
  const std::vector<cplx> v = circle_values(series, r, n);
  double acc = 0.0;
  if (p == 2.0) {
    for (const cplx& x : v) acc += std::norm(x);
  } else {
    for (const cplx& x : v) acc += std::pow(std::abs(x), p);
  }
  return acc / double(n);
}

// Doubling refinement shared by every boundary quadrature: evaluate at n and
// 2n nodes, accept once successive values agree to policy.tol.
template <class Eval>
double refine_doubling(Eval&& eval, std::size_t n_start, const QuadPolicy& policy) {
  std::size_t n = std::max(next_pow2(n_start), std::size_t{8});
  double prev = eval(n);
  while (n < policy.n_cap) {
    n *= 2;
    const double cur = eval(n);
    if (std::abs(cur - prev) < policy.tol) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace detail

// M_p(u, r): uniform-node quadrature of |u_r|^p over the circle, to the 1/p.
// Exact for p = 2 on trigonometric polynomials of degree < N/2.
inline double integral_mean(const TrigSeries& series, double r, double p,
                            const QuadPolicy& policy = {}) {
  if (!(p > 1.0)) throw std::domain_error("integral_mean: p must exceed 1");
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("integral_mean: r must lie in [0, 1]");
  const auto eval = [&](std::size_t n) {
    return std::pow(detail::mean_abs_p(series, r, p, n), 1.0 / p);
  };
  return detail::refine_doubling(eval, std::max(policy.n_start, series.size()), policy);
}

// Hardy norm of a trigonometric polynomial: the integral mean at r = 1
// (means are increasing in r and the series is continuous up to the circle).
inline double hardy_norm(const TrigSeries& series, double p,
                         const QuadPolicy& policy = {}) {
  if (!(p > 1.0)) throw std::domain_error("hardy_norm: p must exceed 1");
  return integral_mean(series, 1.0, p, policy);
}

}  // namespace lumer
