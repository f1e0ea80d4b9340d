// Riesz-ratio experiments for conjugate pairs in base-point norms.
//
// For real u with normalized conjugate v (v(zeta0) = 0) and F = u + iv, the
// ratio ||F|| / ||u|| in the base-point norm H^{1/p}(zeta0) is compared
// against the sharp disk constant
//
//     c_p = sec(pi/2p)  for 1 < p <= 2,    csc(pi/2p)  for 2 <= p < inf,
//
// so c_2 = sqrt(2).  The p = 2 bound holds on every domain that admits the
// conjugate; u = Re z^n with base point 0 attains it exactly.  Everything
// rests on the pointwise identity |z|^2 = 2 (Re z)^2 - Re z^2, which also
// yields the constructive majorant 2 H_u - Re F^2 of |F|^2 whose slack is
// checked here.  Sweeps over seeded random polynomials are exploratory
// evidence for p != 2, not proof.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lumer/conjugate.hpp"
#include "lumer/errors.hpp"
#include "lumer/majorant.hpp"
#include "lumer/random.hpp"
#include "lumer/trig_series.hpp"

namespace lumer {

// Sharp constant of the conjugate-function inequality on the disk; the two
// branches agree at p = 2.
inline double verbitsky_constant(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::domain_error("verbitsky_constant: p must be a finite number > 1");
  return p <= 2.0 ? 1.0 / std::cos(pi / (2.0 * p)) : 1.0 / std::sin(pi / (2.0 * p));
}

// Both sides of |z|^2 = 2 (Re z)^2 - Re z^2; the caller asserts equality.
inline std::pair<double, double> modulus_square_identity(cplx z) {
  const double lhs = std::norm(z);
  const double rhs = 2.0 * z.real() * z.real() - (z * z).real();
  return {lhs, rhs};
}

// Result record of one ratio experiment.
struct RieszReport {
  double p = 2.0;
  double norm_u = 0.0;
  double norm_f = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - ratio; negative means the bound failed
  std::string setting;
  std::uint64_t seed = 0;  // 0 when the experiment is deterministic
};

namespace detail {

inline RieszReport make_report(double p, double norm_u, double norm_f,
                               std::string setting) {
  if (!(norm_u > 0.0)) throw DegenerateZero();
  RieszReport r;
  r.p = p;
  r.norm_u = norm_u;
  r.norm_f = norm_f;
  r.ratio = norm_f / norm_u;
  r.bound = verbitsky_constant(p);
  r.margin = r.bound - r.ratio;
  r.setting = std::move(setting);
  return r;
}

// u + i v as one complex series, with v shifted so it vanishes at zeta0.
inline TrigSeries analytic_completion(const TrigSeries& u, cplx zeta0) {
  TrigSeries v = conjugate_series(u);
  const double shift = poisson_extend(v, std::abs(zeta0), std::arg(zeta0)).real();
  TrigSeries f(u.size());
  for (int n = f.min_mode(); n <= f.max_mode(); ++n)
    f.set_coeff(n, u.coeff(n) + cplx(0.0, 1.0) * v.coeff(n));
  f.set_coeff(0, f.coeff(0) - cplx(0.0, shift));
  return f;
}

}  // namespace detail

// Ratio ||u + iv|| / ||u|| on the disk in the base-point norm at zeta0,
// with v normalized to vanish there.
inline RieszReport riesz_ratio_disk(const TrigSeries& u, cplx zeta0, double p,
                                    const QuadPolicy& policy = {}) {
  require_real(u, "riesz_ratio_disk");
  if (!(std::abs(zeta0) < 1.0))
    throw std::domain_error("riesz_ratio_disk: base point must lie inside the disk");
  const TrigSeries f = detail::analytic_completion(u, zeta0);
  const double norm_u = std::pow(disk_majorant_value(u, p, zeta0, policy), 1.0 / p);
  const double norm_f =
      std::pow(detail::poisson_mean_abs_p(f, p, zeta0, policy), 1.0 / p);
  return detail::make_report(p, norm_u, norm_f, "disk-spectral");
}

// The same ratio on a grid domain: conjugate by line integration, majorants
// by Dirichlet solves, norms by interpolation at zeta0.
inline RieszReport riesz_ratio_grid(const GridField& u, cplx zeta0, double p,
                                    const SolveOptions& solve = {},
                                    const PeriodPolicy& periods = {}) {
  if (u.max_abs() == 0.0) throw DegenerateZero();
  const ConjugateResult conj = conjugate_on_grid(u, zeta0, periods);
  const GridDomain& dom = u.domain();
  GridField modulus(dom);
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j))
        modulus.at(i, j) = std::hypot(u.at(i, j), conj.v.at(i, j));
  const MajorantField h_u = grid_majorant(u, p, solve);
  const MajorantField h_f = grid_majorant(modulus, p, solve);
  const double norm_u = lumer_norm(h_u, zeta0);
  const double norm_f = lumer_norm(h_f, zeta0);
  return detail::make_report(p, norm_u, norm_f,
                             "grid(" + std::to_string(dom.nx()) + "x" +
                                 std::to_string(dom.ny()) +
                                 ",h=" + std::to_string(dom.spacing()) + ")");
}

// Worst slack of 2 H_u - Re F^2 over |F|^2 at the given disk points; a
// correct majorant keeps this nonnegative up to quadrature noise.
inline double riesz_majorant_slack_disk(const TrigSeries& u, std::span<const cplx> points,
                                        const QuadPolicy& policy = {}) {
  require_real(u, "riesz_majorant_slack_disk");
  const TrigSeries f = detail::analytic_completion(u, 0.0);
  double worst = std::numeric_limits<double>::infinity();
  for (const cplx zeta : points) {
    const double h_u = disk_majorant_value(u, 2.0, zeta, policy);
    const cplx fz = poisson_extend(f, std::abs(zeta), std::arg(zeta));
    const double slack = 2.0 * h_u - (fz * fz).real() - std::norm(fz);
    worst = std::min(worst, slack);
  }
  return worst;
}

// Grid flavor of the same check at interior nodes.
inline double riesz_majorant_slack_grid(const GridField& u, const GridField& v,
                                        const MajorantField& h_u) {
  const GridDomain& dom = u.domain();
  if (&dom != &v.domain() || &dom != &h_u.field().domain())
    throw std::invalid_argument("slack check: fields live on different domains");
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.is_interior(i, j)) {
        const cplx fz(u.at(i, j), v.at(i, j));
        const double slack = 2.0 * h_u.field().at(i, j) - (fz * fz).real() - std::norm(fz);
        worst = std::min(worst, slack);
      }
  return worst;
}

// u = Re z^n at base point 0: the ratio attains sqrt(2) exactly, the
// equality case of the p = 2 inequality.
inline RieszReport sharpness_family(int n, std::size_t n_samples = 256) {
  if (n < 1) throw std::domain_error("sharpness_family: n must be >= 1");
  const std::size_t size = std::max(n_samples, next_pow2(std::size_t(4 * n + 4)));
  RieszReport r = riesz_ratio_disk(TrigSeries::cosine(size, n), cplx(0, 0), 2.0);
  r.setting = "disk-spectral sharpness n=" + std::to_string(n);
  return r;
}

struct SweepTrial {
  std::optional<RieszReport> report;
  std::string error;  // empty when the trial succeeded
};

struct SweepSummary {
  double p = 2.0;
  std::uint64_t seed = 0;
  int degree_cap = 0;
  bool exploratory = false;  // sweeps at p != 2 probe beyond the proved case
  double max_ratio = 0.0;
  std::size_t argmax = 0;
  std::vector<SweepTrial> trials;
};

// Seeded sweep of random real trig polynomials through riesz_ratio_disk at
// base point 0.  Per-trial degeneracies are recorded, not fatal.
inline SweepSummary conjecture_sweep(double p, std::size_t trials, int degree_cap,
                                     std::uint64_t seed, const QuadPolicy& policy = {}) {
  if (trials < 1) throw std::invalid_argument("conjecture_sweep: need at least one trial");
  if (!(p > 1.0)) throw std::domain_error("conjecture_sweep: p must exceed 1");
  const std::size_t n_samples = std::max<std::size_t>(256, next_pow2(std::size_t(2 * degree_cap + 2)));
  GaussianSampler g(seed);
  SweepSummary s;
  s.p = p;
  s.seed = seed;
  s.degree_cap = degree_cap;
  s.exploratory = (p != 2.0);
  s.max_ratio = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    TrigSeries u = random_real_trig_poly(n_samples, degree_cap, g);
    SweepTrial trial;
    try {
      RieszReport r = riesz_ratio_disk(u, cplx(0, 0), p, policy);
      r.seed = seed;
      if (r.ratio > s.max_ratio) {
        s.max_ratio = r.ratio;
        s.argmax = t;
      }
      trial.report = std::move(r);
    } catch (const DegenerateZero& e) {
      trial.error = "degenerate_zero";
    }
    s.trials.push_back(std::move(trial));
  }
  return s;
}

}  // namespace lumer
