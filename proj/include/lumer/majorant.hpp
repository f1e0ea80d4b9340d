// Least harmonic majorants of |u|^p and the norms they induce.
//
// On the unit disk the least harmonic majorant of |u|^p for boundary-
// continuous u is the Poisson integral of the boundary values,
//
//     H(zeta) = (1/2pi) int P(zeta, e^{i theta}) |u(e^{i theta})|^p d theta,
//     P(zeta, w) = (1 - |zeta|^2) / |w - zeta|^2,
//
// evaluated here by uniform-node quadrature with the usual doubling
// refinement.  On a grid-mask domain the majorant is the discrete Dirichlet
// solution with boundary data |u|^p; for data continuous up to the boundary
// the Dirichlet extension is the least harmonic majorant, which is why the
// module restricts itself to such inputs.  The base-point norm is
// H^{1/p}(zeta0) either way.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "lumer/dirichlet.hpp"
#include "lumer/grid.hpp"
#include "lumer/trig_series.hpp"

namespace lumer {

enum class MajorantSource { spectral_disk, grid };

namespace detail {

// Poisson quadrature of |u|^p on the unit circle against the kernel at
// zeta; accepts complex series (used for analytic completions).
inline double poisson_mean_abs_p(const TrigSeries& u, double p, cplx zeta,
                                 const QuadPolicy& policy) {
  if (!(p > 1.0)) throw std::domain_error("majorant: p must exceed 1");
  if (!(std::abs(zeta) < 1.0))
    throw std::domain_error("majorant: evaluation point must lie inside the disk");
  const double a = std::norm(zeta);
  const auto eval = [&](std::size_t n) {
    const std::vector<cplx> v = circle_values(u, 1.0, n);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx w = std::polar(1.0, 2.0 * pi * double(k) / double(n));
      const double kernel = (1.0 - a) / std::norm(w - zeta);
      acc += kernel * (p == 2.0 ? std::norm(v[k]) : std::pow(std::abs(v[k]), p));
    }
    return acc / double(n);
  };
  return refine_doubling(eval, std::max(policy.n_start, u.size()), policy);
}

}  // namespace detail

// H_u(zeta0) on the disk: the Poisson integral of |u|^p at zeta0.
inline double disk_majorant_value(const TrigSeries& u, double p, cplx zeta0,
                                  const QuadPolicy& policy = {}) {
  require_real(u, "disk_majorant_value");
  return detail::poisson_mean_abs_p(u, p, zeta0, policy);
}

// A computed harmonic majorant of |u|^p, carried either as the boundary
// series of the disk closed form or as a solved grid field.
class MajorantField {
 public:
  static MajorantField disk(TrigSeries u, double p, QuadPolicy policy = {}) {
    require_real(u, "MajorantField::disk");
    if (!(p > 1.0)) throw std::domain_error("majorant: p must exceed 1");
    MajorantField m;
    m.series_ = std::move(u);
    m.p_ = p;
    m.policy_ = policy;
    m.source_ = MajorantSource::spectral_disk;
    return m;
  }

  static MajorantField grid(GridField solved, double p, double residual) {
    MajorantField m;
    m.field_ = std::move(solved);
    m.p_ = p;
    m.residual_ = residual;
    m.source_ = MajorantSource::grid;
    return m;
  }

  MajorantSource source() const { return source_; }
  double p() const { return p_; }
  double residual() const { return residual_; }

  const GridField& field() const {
    if (!field_) throw std::logic_error("majorant has no grid field");
    return *field_;
  }
  const TrigSeries& boundary_series() const {
    if (!series_) throw std::logic_error("majorant has no boundary series");
    return *series_;
  }

  // H(zeta): Poisson quadrature on the disk path, bilinear interpolation of
  // the solved field on the grid path.
  double value_at(cplx zeta) const {
    if (source_ == MajorantSource::spectral_disk)
      return detail::poisson_mean_abs_p(*series_, p_, zeta, policy_);
    return bilinear(*field_, zeta);
  }

 private:
  MajorantField() = default;

  std::optional<TrigSeries> series_;
  std::optional<GridField> field_;
  QuadPolicy policy_;
  double p_ = 2.0;
  double residual_ = 0.0;
  MajorantSource source_ = MajorantSource::spectral_disk;
};

// Discrete least majorant of |u|^p on the field's domain: Dirichlet solve
// with boundary data |u|^p.
inline MajorantField grid_majorant(const GridField& u, double p,
                                   const SolveOptions& opt = {}) {
  if (!(p > 1.0)) throw std::domain_error("grid_majorant: p must exceed 1");
  u.require_finite();
  const GridDomain& dom = u.domain();
  GridField data(dom);
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) data.at(i, j) = std::pow(std::abs(u.at(i, j)), p);
  SolveReport rep;
  GridField solved = solve_laplace_dirichlet(data, &rep, opt);
  return MajorantField::grid(std::move(solved), p, rep.residual);
}

// The base-point norm H^{1/p}(zeta0).
inline double lumer_norm(const MajorantField& majorant, cplx zeta0) {
  const double value = majorant.value_at(zeta0);
  // clamp quadrature noise around zero for the degenerate u = 0 case
  return std::pow(std::max(value, 0.0), 1.0 / majorant.p());
}

// Worst slack of the domination H >= |u|^p over interior nodes (negative
// values mean violation).
inline double majorant_min_slack(const MajorantField& majorant, const GridField& u) {
  const GridField& h = majorant.field();
  if (&h.domain() != &u.domain())
    throw std::invalid_argument("majorant and field live on different domains");
  const GridDomain& dom = u.domain();
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.is_interior(i, j))
        worst = std::min(worst, h.at(i, j) - std::pow(std::abs(u.at(i, j)), majorant.p()));
  return worst;
}

}  // namespace lumer
