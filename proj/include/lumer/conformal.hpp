// Closed-form conformal map catalog and the base-point-norm isometry check.
//
// Composition with a conformal map carries the base-point norm over
// unchanged: ||u|| at zeta0 equals ||u o Phi|| at Phi^{-1}(zeta0).  The
// catalog is closed-form only, so the check pits two independent boundary
// quadratures against each other rather than two numerical mappings.
//
// Disk automorphisms are  Phi(z) = e^{i phi} (z - a) / (1 - conj(a) z)
// with |a| < 1; möbius(0, phi) is the rotation by phi.

#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "lumer/majorant.hpp"
#include "lumer/trig_series.hpp"

namespace lumer {

class ConformalMap {
 public:
  enum class Kind { mobius, cayley, wedge, composition };

  static ConformalMap mobius(cplx a, double phi) {
    if (!(std::abs(a) < 1.0))
      throw std::invalid_argument("mobius: parameter a must lie inside the disk");
    ConformalMap m(Kind::mobius);
    m.a_ = a;
    m.phi_ = phi;
    return m;
  }

  static ConformalMap rotation(double phi) { return mobius(0.0, phi); }

  // unit disk onto the upper half-plane, w = i (1 - z) / (1 + z)
  static ConformalMap cayley() { return ConformalMap(Kind::cayley); }

  // z^alpha, opening the wedge 0 < arg z < pi/alpha onto the half-plane
  static ConformalMap wedge(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("wedge: alpha must be positive");
    ConformalMap m(Kind::wedge);
    m.alpha_ = alpha;
    return m;
  }

  static ConformalMap compose(ConformalMap outer, ConformalMap inner) {
    ConformalMap m(Kind::composition);
    m.outer_ = std::make_shared<ConformalMap>(std::move(outer));
    m.inner_ = std::make_shared<ConformalMap>(std::move(inner));
    return m;
  }

  Kind kind() const { return kind_; }
  cplx mobius_a() const { return a_; }
  double mobius_phi() const { return phi_; }
  double wedge_alpha() const { return alpha_; }
  const ConformalMap& outer() const { return *outer_; }
  const ConformalMap& inner() const { return *inner_; }

  cplx forward(cplx z) const {
    switch (kind_) {
      case Kind::mobius:
        return std::polar(1.0, phi_) * (z - a_) / (1.0 - std::conj(a_) * z);
      case Kind::cayley:
        return cplx(0, 1) * (1.0 - z) / (1.0 + z);
      case Kind::wedge:
        return std::pow(z, alpha_);
      case Kind::composition:
        return outer_->forward(inner_->forward(z));
    }
    throw std::logic_error("unreachable");
  }

  cplx inverse(cplx w) const {
    switch (kind_) {
      case Kind::mobius: {
        const cplx t = w * std::polar(1.0, -phi_);
        return (t + a_) / (1.0 + std::conj(a_) * t);
      }
      case Kind::cayley:
        return (cplx(0, 1) - w) / (cplx(0, 1) + w);
      case Kind::wedge:
        return std::pow(w, 1.0 / alpha_);
      case Kind::composition:
        return inner_->inverse(outer_->inverse(w));
    }
    throw std::logic_error("unreachable");
  }

  cplx derivative(cplx z) const {
    switch (kind_) {
      case Kind::mobius: {
        const cplx d = 1.0 - std::conj(a_) * z;
        return std::polar(1.0, phi_) * (1.0 - std::norm(a_)) / (d * d);
      }
      case Kind::cayley: {
        const cplx d = 1.0 + z;
        return cplx(0, -2) / (d * d);
      }
      case Kind::wedge:
        return alpha_ * std::pow(z, alpha_ - 1.0);
      case Kind::composition:
        return outer_->derivative(inner_->forward(z)) * inner_->derivative(z);
    }
    throw std::logic_error("unreachable");
  }

  bool disk_automorphism() const {
    if (kind_ == Kind::mobius) return true;
    if (kind_ == Kind::composition)
      return outer_->disk_automorphism() && inner_->disk_automorphism();
    return false;
  }

 private:
  explicit ConformalMap(Kind k) : kind_(k) {}

  Kind kind_;
  cplx a_ = 0.0;
  double phi_ = 0.0;
  double alpha_ = 1.0;
  std::shared_ptr<const ConformalMap> outer_, inner_;
};

// u o Phi as a plain evaluator; defined wherever u accepts Phi(z).
template <class F>
auto pullback(F&& u, const ConformalMap& map) {
  return [u = std::forward<F>(u), map](cplx z) { return u(map.forward(z)); };
}

// Harmonic extension of a boundary series as an evaluator on the open disk.
inline std::function<cplx(cplx)> harmonic_extension(const TrigSeries& series) {
  return [series](cplx z) { return poisson_extend(series, std::abs(z), std::arg(z)); };
}

struct IsometryResult {
  double norm_before = 0.0;
  double norm_after = 0.0;
  double discrepancy = 0.0;
};

// ||u|| at zeta0 versus ||u o Phi|| at Phi^{-1}(zeta0), both by boundary
// quadrature; the pullback side samples u along the rotated circle and is
// a genuinely independent integral.
inline IsometryResult isometry_check(const TrigSeries& u, const ConformalMap& map,
                                     cplx zeta0, double p, QuadPolicy policy = {}) {
  require_real(u, "isometry_check");
  if (!map.disk_automorphism())
    throw std::invalid_argument("isometry_check: disk norms need a disk automorphism");
  if (!(std::abs(zeta0) < 1.0))
    throw std::domain_error("isometry_check: base point must lie inside the disk");
  if (!(p > 1.0)) throw std::domain_error("isometry_check: p must exceed 1");

  IsometryResult out;
  out.norm_before = std::pow(disk_majorant_value(u, p, zeta0, policy), 1.0 / p);

  const cplx pulled_base = map.inverse(zeta0);
  const double rr = std::norm(pulled_base);
  const auto eval = [&](std::size_t n) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx w = std::polar(1.0, 2.0 * pi * double(k) / double(n));
      const double value = std::abs(boundary_value(u, std::arg(map.forward(w))));
      const double kernel = (1.0 - rr) / std::norm(w - pulled_base);
      acc += kernel * std::pow(value, p);
    }
    return acc / double(n);
  };
  out.norm_after = std::pow(
      detail::refine_doubling(eval, std::max(policy.n_start, u.size()), policy), 1.0 / p);
  out.discrepancy = std::abs(out.norm_before - out.norm_after);
  return out;
}

}  // namespace lumer
