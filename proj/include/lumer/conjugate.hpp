// Harmonic conjugates on grid domains by Cauchy-Riemann line integration.
//
// The conjugate differential of u is  dv = -u_y dx + u_x dy.  Integrating
// it along lattice paths (trapezoid per edge) builds v; the construction is
// path independent exactly when every circulation (period) of dv around a
// hole of the domain vanishes.  A nonzero period is the classical
// obstruction on multiply connected domains -- log|z| on an annulus has
// period 2 pi -- and is reported as an existence failure rather than a
// multi-valued conjugate.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <utility>
#include <vector>

#include "lumer/errors.hpp"
#include "lumer/grid.hpp"

namespace lumer {

struct GradientPair {
  GridField du_dx, du_dy;
};

// Central differences at nodes with both lattice neighbors in the mask,
// three-point one-sided stencils (exact on quadratics) where only one side
// is available, two-point one-sided as the last resort.
inline GradientPair grid_gradient(const GridField& u) {
  const GridDomain& dom = u.domain();
  const double h = dom.spacing();
  GradientPair g{GridField(dom), GridField(dom)};

  auto deriv = [&](int i, int j, int di, int dj) -> double {
    const bool plus = dom.in_mask(i + di, j + dj);
    const bool minus = dom.in_mask(i - di, j - dj);
    if (plus && minus)
      return (u.at(i + di, j + dj) - u.at(i - di, j - dj)) / (2.0 * h);
    if (plus) {
      if (dom.in_mask(i + 2 * di, j + 2 * dj))
        return (-3.0 * u.at(i, j) + 4.0 * u.at(i + di, j + dj) -
                u.at(i + 2 * di, j + 2 * dj)) / (2.0 * h);
      return (u.at(i + di, j + dj) - u.at(i, j)) / h;
    }
    if (minus) {
      if (dom.in_mask(i - 2 * di, j - 2 * dj))
        return (3.0 * u.at(i, j) - 4.0 * u.at(i - di, j - dj) +
                u.at(i - 2 * di, j - 2 * dj)) / (2.0 * h);
      return (u.at(i, j) - u.at(i - di, j - dj)) / h;
    }
    return 0.0;
  };

  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        g.du_dx.at(i, j) = deriv(i, j, 1, 0);
        g.du_dy.at(i, j) = deriv(i, j, 0, 1);
      }
  return g;
}

using LatticePath = std::vector<std::pair<int, int>>;

namespace detail {

inline void require_lattice_path(const GridDomain& dom, const LatticePath& path,
                                 bool closed) {
  if (path.size() < 2) throw std::invalid_argument("lattice path needs at least two nodes");
  const std::size_t edges = closed ? path.size() : path.size() - 1;
  for (std::size_t t = 0; t < edges; ++t) {
    const auto [i0, j0] = path[t];
    const auto [i1, j1] = path[(t + 1) % path.size()];
    if (!dom.in_mask(i0, j0) || !dom.in_mask(i1, j1))
      throw std::domain_error("lattice path leaves the domain");
    if (std::abs(i1 - i0) + std::abs(j1 - j0) != 1)
      throw std::invalid_argument("lattice path nodes are not 4-adjacent");
  }
}

// Trapezoid quadrature of -u_y dx + u_x dy along consecutive path edges.
inline double path_integral(const GradientPair& g, const GridDomain& dom,
                            const LatticePath& path, bool closed) {
  const double h = dom.spacing();
  double acc = 0.0;
  const std::size_t edges = closed ? path.size() : path.size() - 1;
  for (std::size_t t = 0; t < edges; ++t) {
    const auto [i0, j0] = path[t];
    const auto [i1, j1] = path[(t + 1) % path.size()];
    const int dx = i1 - i0, dy = j1 - j0;
    if (dx != 0)
      acc -= dx * h * 0.5 * (g.du_dy.at(i0, j0) + g.du_dy.at(i1, j1));
    if (dy != 0)
      acc += dy * h * 0.5 * (g.du_dx.at(i0, j0) + g.du_dx.at(i1, j1));
  }
  return acc;
}

}  // namespace detail

// Line integral of the conjugate differential along an open lattice path.
inline double conjugate_line_integral(const GridField& u, const LatticePath& path) {
  detail::require_lattice_path(u.domain(), path, /*closed=*/false);
  return detail::path_integral(grid_gradient(u), u.domain(), path, false);
}

// Circulation of the conjugate differential around a closed lattice cycle
// (the wrap edge from the last node back to the first is implied).
inline double period_around_hole(const GridField& u, const LatticePath& loop) {
  detail::require_lattice_path(u.domain(), loop, /*closed=*/true);
  return detail::path_integral(grid_gradient(u), u.domain(), loop, true);
}

// One counterclockwise lattice cycle per hole of the domain, traced through
// mask nodes two cells clear of the hole so its gradients are accurate.
inline std::vector<LatticePath> hole_loops(const GridDomain& dom) {
  const int nx = dom.nx(), ny = dom.ny();
  auto idx = [&](int i, int j) { return std::size_t(j) * nx + i; };

  // flood the outside-connected exterior (8-connectivity) from the frame
  std::vector<std::uint8_t> outer(std::size_t(nx) * ny, 0);
  std::queue<std::pair<int, int>> q;
  auto push_outer = [&](int i, int j) {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return;
    if (dom.in_mask(i, j) || outer[idx(i, j)]) return;
    outer[idx(i, j)] = 1;
    q.emplace(i, j);
  };
  for (int i = 0; i < nx; ++i) { push_outer(i, 0); push_outer(i, ny - 1); }
  for (int j = 0; j < ny; ++j) { push_outer(0, j); push_outer(nx - 1, j); }
  while (!q.empty()) {
    auto [i, j] = q.front();
    q.pop();
    for (int dj = -1; dj <= 1; ++dj)
      for (int di = -1; di <= 1; ++di) push_outer(i + di, j + dj);
  }

  // label hole components (exterior cells not reachable from the frame)
  std::vector<int> hole(std::size_t(nx) * ny, -1);
  int n_holes = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      if (dom.in_mask(i, j) || outer[idx(i, j)] || hole[idx(i, j)] >= 0) continue;
      std::queue<std::pair<int, int>> hq;
      hq.emplace(i, j);
      hole[idx(i, j)] = n_holes;
      while (!hq.empty()) {
        auto [hi, hj] = hq.front();
        hq.pop();
        for (int dj = -1; dj <= 1; ++dj)
          for (int di = -1; di <= 1; ++di) {
            const int ii = hi + di, jj = hj + dj;
            if (ii < 0 || ii >= nx || jj < 0 || jj >= ny) continue;
            if (dom.in_mask(ii, jj) || outer[idx(ii, jj)] || hole[idx(ii, jj)] >= 0) continue;
            hole[idx(ii, jj)] = n_holes;
            hq.emplace(ii, jj);
          }
      }
      ++n_holes;
    }

  std::vector<LatticePath> loops;
  for (int hid = 0; hid < n_holes; ++hid) {
    // obstacle = hole dilated by two cells (Chebyshev metric)
    std::vector<std::uint8_t> obst(std::size_t(nx) * ny, 0);
    long ci_sum = 0, cj_sum = 0, count = 0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if (hole[idx(i, j)] == hid) {
          ci_sum += i;
          cj_sum += j;
          ++count;
          for (int dj = -2; dj <= 2; ++dj)
            for (int di = -2; di <= 2; ++di) {
              const int ii = i + di, jj = j + dj;
              if (ii >= 0 && ii < nx && jj >= 0 && jj < ny) obst[idx(ii, jj)] = 1;
            }
        }

    // start just right of the obstacle, level with its centroid; the
    // centroid of a non-convex hole may itself fall outside the obstacle
    const int cj = int(cj_sum / count);
    int si = int(ci_sum / count);
    while (si < nx && !obst[idx(si, cj)]) ++si;
    while (si < nx && obst[idx(si, cj)]) ++si;
    if (si >= nx || !dom.in_mask(si, cj))
      throw std::runtime_error("hole loop: domain too thin around a hole");

    // left-hand wall follow, obstacle on the left, counterclockwise
    const int di4[4] = {0, -1, 0, 1}, dj4[4] = {1, 0, -1, 0};  // N W S E
    auto blocked = [&](int i, int j) {
      return i < 0 || i >= nx || j < 0 || j >= ny || obst[idx(i, j)];
    };
    LatticePath loop;
    int ci = si, cjj = cj, dir = 0;  // heading north, hole to the west
    do {
      loop.emplace_back(ci, cjj);
      const int left = (dir + 1) % 4;
      const int right = (dir + 3) % 4;
      int step;
      if (!blocked(ci + di4[left], cjj + dj4[left])) step = left;
      else if (!blocked(ci + di4[dir], cjj + dj4[dir])) step = dir;
      else if (!blocked(ci + di4[right], cjj + dj4[right])) step = right;
      else step = (dir + 2) % 4;
      dir = step;
      ci += di4[dir];
      cjj += dj4[dir];
      if (!dom.in_mask(ci, cjj))
        throw std::runtime_error("hole loop: domain too thin around a hole");
      if (loop.size() > 8 * std::size_t(nx) * ny)
        throw std::runtime_error("hole loop: tracing failed to close");
    } while (!(ci == si && cjj == cj && dir == 0));
    loops.push_back(std::move(loop));
  }
  return loops;
}

struct PeriodPolicy {
  double floor = 1e-6;
  double scale = 10.0;
};

// Scale-aware period tolerance: max(floor, scale * h^2 * loop length * max
// gradient magnitude along the loop).
inline double period_tolerance(const GradientPair& g, const GridDomain& dom,
                               const LatticePath& loop, const PeriodPolicy& policy) {
  double max_grad = 0.0;
  for (const auto& [i, j] : loop)
    max_grad = std::max(max_grad, std::hypot(g.du_dx.at(i, j), g.du_dy.at(i, j)));
  const double h = dom.spacing();
  return std::max(policy.floor, policy.scale * h * h * (h * double(loop.size())) * max_grad);
}

struct ConjugateResult {
  GridField v;
  std::vector<double> periods;
  cplx zeta0;
};

// Conjugate of u normalized to vanish at zeta0.  Values spread breadth-first
// from the mask node nearest zeta0 (lexicographic tie-break, fixed neighbor
// order E/W/N/S) so the result is reproducible; path independence up to
// O(h^2) is guaranteed by the period test.
inline ConjugateResult conjugate_on_grid(const GridField& u, cplx zeta0,
                                         const PeriodPolicy& policy = {}) {
  const GridDomain& dom = u.domain();
  const GradientPair g = grid_gradient(u);

  std::vector<double> periods;
  for (const LatticePath& loop : hole_loops(dom)) {
    const double period = detail::path_integral(g, dom, loop, true);
    periods.push_back(period);
    const double tol = period_tolerance(g, dom, loop, policy);
    if (std::abs(period) > tol) throw ExistenceFailure(period, tol);
  }

  // root: mask node nearest zeta0
  int ri = -1, rj = -1;
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        const double d = std::abs(dom.node_point(i, j) - zeta0);
        if (d < best) {
          best = d;
          ri = i;
          rj = j;
        }
      }
  if (ri < 0) throw std::domain_error("conjugate_on_grid: empty domain");

  GridField v(dom);
  std::vector<std::uint8_t> seen(std::size_t(dom.nx()) * dom.ny(), 0);
  std::queue<std::pair<int, int>> q;
  seen[dom.index(ri, rj)] = 1;
  q.emplace(ri, rj);
  const double h = dom.spacing();
  const int di4[4] = {1, -1, 0, 0}, dj4[4] = {0, 0, 1, -1};
  while (!q.empty()) {
    auto [i, j] = q.front();
    q.pop();
    for (int d = 0; d < 4; ++d) {
      const int ii = i + di4[d], jj = j + dj4[d];
      if (!dom.in_mask(ii, jj) || seen[dom.index(ii, jj)]) continue;
      double step = 0.0;
      if (di4[d] != 0)
        step = -di4[d] * h * 0.5 * (g.du_dy.at(i, j) + g.du_dy.at(ii, jj));
      else
        step = dj4[d] * h * 0.5 * (g.du_dx.at(i, j) + g.du_dx.at(ii, jj));
      v.at(ii, jj) = v.at(i, j) + step;
      seen[dom.index(ii, jj)] = 1;
      q.emplace(ii, jj);
    }
  }

  const double shift = bilinear(v, zeta0);  // throws if zeta0 is outside
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) v.at(i, j) -= shift;

  return ConjugateResult{std::move(v), std::move(periods), zeta0};
}

}  // namespace lumer
