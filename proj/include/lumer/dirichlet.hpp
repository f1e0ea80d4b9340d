// Discrete Dirichlet problem on a mask domain: the 5-point Laplacian
// vanishes at interior nodes while boundary nodes carry the data exactly.
// The interior system is symmetric positive definite and is solved by
// conjugate gradients from a zero start, run to a relative residual of
// 1e-10 by default, so repeated solves are bit-reproducible.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "lumer/errors.hpp"
#include "lumer/grid.hpp"

namespace lumer {

struct SolveOptions {
  double rel_tol = 1e-10;
  std::size_t max_iter = 1'000'000;
};

struct SolveReport {
  double residual = 0.0;
  std::size_t iterations = 0;
};

// Solves the 5-point Laplace equation with Dirichlet values `data` on the
// boundary nodes.  Returns the full field (boundary nodes keep the data).
// Throws SolverFailure if the iteration cap is hit first.
inline GridField solve_laplace_dirichlet(const GridField& data, SolveReport* report = nullptr,
                                         const SolveOptions& opt = {}) {
  const GridDomain& dom = data.domain();
  data.require_finite();

  const int nx = dom.nx(), ny = dom.ny();
  std::vector<std::ptrdiff_t> id(std::size_t(nx) * ny, -1);
  std::vector<std::pair<int, int>> nodes;
  nodes.reserve(dom.interior_count());
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (dom.is_interior(i, j)) {
        id[dom.index(i, j)] = std::ptrdiff_t(nodes.size());
        nodes.emplace_back(i, j);
      }
  const std::size_t n = nodes.size();

  // A x = b with (A x)_k = 4 x_k - sum of interior neighbors; boundary
  // neighbors move their data to the right-hand side.
  std::vector<double> b(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [i, j] = nodes[k];
    const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int ii = i + di[d], jj = j + dj[d];
      if (dom.is_boundary(ii, jj)) b[k] += data.at(ii, jj);
    }
  }

  auto apply = [&](const std::vector<double>& x, std::vector<double>& ax) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto [i, j] = nodes[k];
      double acc = 4.0 * x[k];
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const std::ptrdiff_t kk = id[dom.index(i + di[d], j + dj[d])];
        if (kk >= 0) acc -= x[std::size_t(kk)];
      }
      ax[k] = acc;
    }
  };

  auto dot = [](const std::vector<double>& a, const std::vector<double>& c) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * c[k];
    return s;
  };

  std::vector<double> x(n, 0.0);
  double bnorm = std::sqrt(dot(b, b));
  SolveReport rep;
  if (bnorm > 0.0) {
    std::vector<double> r = b, p = b, ap(n);
    double rr = dot(r, r);
    while (rep.iterations < opt.max_iter) {
      if (std::sqrt(rr) <= opt.rel_tol * bnorm) break;
      apply(p, ap);
      const double alpha = rr / dot(p, ap);
      for (std::size_t k = 0; k < n; ++k) x[k] += alpha * p[k];
      for (std::size_t k = 0; k < n; ++k) r[k] -= alpha * ap[k];
      const double rr_next = dot(r, r);
      const double beta = rr_next / rr;
      for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + beta * p[k];
      rr = rr_next;
      ++rep.iterations;
    }
    rep.residual = std::sqrt(rr) / bnorm;
    if (rep.residual > opt.rel_tol) throw SolverFailure(rep.residual, rep.iterations);
  }

  GridField out(dom);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (dom.is_boundary(i, j)) out.at(i, j) = data.at(i, j);
  for (std::size_t k = 0; k < n; ++k) out.at(nodes[k].first, nodes[k].second) = x[k];
  if (report) *report = rep;
  return out;
}

// Largest 5-point Laplacian residual |4u - sum of neighbors| over interior
// nodes; the discrete-harmonicity check for solver output.
inline double max_laplacian_residual(const GridField& u) {
  const GridDomain& dom = u.domain();
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.is_interior(i, j)) {
        const double r = 4.0 * u.at(i, j) - u.at(i + 1, j) - u.at(i - 1, j) -
                         u.at(i, j + 1) - u.at(i, j - 1);
        worst = std::max(worst, std::abs(r));
      }
  return worst;
}

}  // namespace lumer
