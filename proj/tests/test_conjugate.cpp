#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "lumer/conjugate.hpp"

using namespace lumer;

namespace {
double re_z3(cplx z) { return std::pow(z.real(), 3) - 3.0 * z.real() * z.imag() * z.imag(); }
double im_z3(cplx z) { return 3.0 * z.real() * z.real() * z.imag() - std::pow(z.imag(), 3); }
}  // namespace

TEST_CASE("gradient of linear and quadratic fields is exact") {
  GridDomain dom = GridDomain::square(2.0, 1.0 / 8);
  GridField x = GridField::sample(dom, [](cplx z) { return z.real(); });
  GradientPair gx = grid_gradient(x);
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        CHECK(gx.du_dx.at(i, j) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(gx.du_dy.at(i, j)) < 1e-13);
      }

  GridField q = GridField::sample(dom, [](cplx z) {
    return z.real() * z.real() - z.imag() * z.imag();
  });
  GradientPair gq = grid_gradient(q);
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        const cplx p = dom.node_point(i, j);
        CHECK(gq.du_dx.at(i, j) == doctest::Approx(2.0 * p.real()).epsilon(1e-12));
        CHECK(gq.du_dy.at(i, j) == doctest::Approx(-2.0 * p.imag()).epsilon(1e-12));
      }
}

TEST_CASE("gradient of Re z^3 on a disk mask is second-order accurate") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 64);
  GridField u = GridField::sample(dom, re_z3);
  GradientPair g = grid_gradient(u);
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        const cplx p = dom.node_point(i, j);
        const double gx = 3.0 * (p.real() * p.real() - p.imag() * p.imag());
        const double gy = -6.0 * p.real() * p.imag();
        worst = std::max(worst, std::abs(g.du_dx.at(i, j) - gx));
        worst = std::max(worst, std::abs(g.du_dy.at(i, j) - gy));
      }
  CHECK(worst <= 2e-3);  // ~ 8 h^2 at h = 1/64
}

TEST_CASE("hole loops: none on a disk, one on an annulus") {
  CHECK(hole_loops(GridDomain::disk(1.0, 1.0 / 16)).empty());
  auto loops = hole_loops(GridDomain::annulus(0.5, 1.5, 1.0 / 32));
  REQUIRE(loops.size() == 1);
  // the loop encircles the hole: it must wind once around the origin
  double winding = 0.0;
  const auto& loop = loops[0];
  const GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 32);
  for (std::size_t t = 0; t < loop.size(); ++t) {
    const cplx a = dom.node_point(loop[t].first, loop[t].second);
    const cplx b = dom.node_point(loop[(t + 1) % loop.size()].first,
                                  loop[(t + 1) % loop.size()].second);
    winding += std::arg(b / a);
  }
  CHECK(winding == doctest::Approx(2.0 * pi).epsilon(1e-9));
}

TEST_CASE("periods on the annulus: conjugable vs obstructed data") {
  GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 64);
  auto loops = hole_loops(dom);
  REQUIRE(loops.size() == 1);

  GridField re_z = GridField::sample(dom, [](cplx z) { return z.real(); });
  CHECK(std::abs(period_around_hole(re_z, loops[0])) <= 1e-3);

  GridField log_abs = GridField::sample(dom, [](cplx z) { return std::log(std::abs(z)); });
  CHECK(period_around_hole(log_abs, loops[0]) ==
        doctest::Approx(2.0 * pi).epsilon(0.01));

  GridField c = GridField::sample(dom, [](cplx) { return 4.2; });
  CHECK(period_around_hole(c, loops[0]) == 0.0);
}

TEST_CASE("two holes get one loop each, with the right circulations") {
  // 21 x 9 grid, two 3x3 holes; u = log|z - c1| winds once around the
  // first hole only
  const int nx = 21, ny = 9;
  std::vector<std::uint8_t> mask(std::size_t(nx) * ny, 1);
  for (int j = 3; j <= 5; ++j)
    for (int i : {4, 5, 6, 14, 15, 16}) mask[std::size_t(j) * nx + i] = 0;
  GridDomain dom(nx, ny, 0.1, 0.0, 0.0, std::move(mask));
  auto loops = hole_loops(dom);
  REQUIRE(loops.size() == 2);

  const cplx c1(0.5, 0.4);
  GridField u = GridField::sample(dom, [&](cplx z) { return std::log(std::abs(z - c1)); });
  const double p0 = period_around_hole(u, loops[0]);
  const double p1 = period_around_hole(u, loops[1]);
  // one loop sees the full circulation, the other almost none
  const double big = std::max(std::abs(p0), std::abs(p1));
  const double small = std::min(std::abs(p0), std::abs(p1));
  CHECK(big == doctest::Approx(2.0 * pi).epsilon(0.1));
  CHECK(small <= 0.2);
}

TEST_CASE("period additivity: traversing a loop twice doubles it") {
  GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 32);
  auto loops = hole_loops(dom);
  REQUIRE(loops.size() == 1);
  GridField log_abs = GridField::sample(dom, [](cplx z) { return std::log(std::abs(z)); });
  LatticePath doubled = loops[0];
  doubled.insert(doubled.end(), loops[0].begin(), loops[0].end());
  CHECK(period_around_hole(log_abs, doubled) ==
        doctest::Approx(2.0 * period_around_hole(log_abs, loops[0])).epsilon(1e-12));
}

TEST_CASE("lattice path validation") {
  GridDomain dom = GridDomain::square(1.0, 0.125);
  GridField u = GridField::sample(dom, [](cplx z) { return z.real(); });
  LatticePath not_adjacent = {{0, 0}, {2, 0}};
  CHECK_THROWS_AS(period_around_hole(u, not_adjacent), std::invalid_argument);
  LatticePath outside = {{0, 0}, {0, -1}};
  CHECK_THROWS_AS(conjugate_line_integral(u, outside), std::domain_error);
}

TEST_CASE("conjugate of Re z on a disk mask is Im z") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  GridField u = GridField::sample(dom, [](cplx z) { return z.real(); });
  ConjugateResult r = conjugate_on_grid(u, cplx(0, 0));
  CHECK(r.periods.empty());
  CHECK(std::abs(bilinear(r.v, cplx(0, 0))) <= 1e-9);
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j))
        worst = std::max(worst, std::abs(r.v.at(i, j) - dom.node_point(i, j).imag()));
  CHECK(worst <= 1e-12);
}

TEST_CASE("conjugate of Re z^2 is Im z^2") {
  GridDomain dom = GridDomain::square(2.0, 1.0 / 16);
  GridField u = GridField::sample(dom, [](cplx z) {
    return z.real() * z.real() - z.imag() * z.imag();
  });
  ConjugateResult r = conjugate_on_grid(u, cplx(0, 0));
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) {
        const cplx p = dom.node_point(i, j);
        worst = std::max(worst, std::abs(r.v.at(i, j) - 2.0 * p.real() * p.imag()));
      }
  CHECK(worst <= 1e-12);
}

TEST_CASE("conjugate normalization works away from the origin") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  GridField u = GridField::sample(dom, re_z3);
  const cplx zeta0(0.31, -0.22);
  ConjugateResult r = conjugate_on_grid(u, zeta0);
  CHECK(std::abs(bilinear(r.v, zeta0)) <= 1e-9);
}

TEST_CASE("log|z| on the annulus is rejected with the 2 pi period") {
  GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 64);
  GridField u = GridField::sample(dom, [](cplx z) { return std::log(std::abs(z)); });
  CHECK_THROWS_AS(conjugate_on_grid(u, cplx(1.0, 0.0)), ExistenceFailure);
  try {
    conjugate_on_grid(u, cplx(1.0, 0.0));
  } catch (const ExistenceFailure& e) {
    CHECK(e.period() == doctest::Approx(2.0 * pi).epsilon(0.01));
    CHECK(e.tolerance() < std::abs(e.period()));
  }
}

TEST_CASE("Re z on the annulus is conjugable and normalized") {
  GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 32);
  GridField u = GridField::sample(dom, [](cplx z) { return z.real(); });
  ConjugateResult r = conjugate_on_grid(u, cplx(1.0, 0.0));
  REQUIRE(r.periods.size() == 1);
  CHECK(std::abs(r.periods[0]) <= 1e-6);
  CHECK(std::abs(bilinear(r.v, cplx(1.0, 0.0))) <= 1e-9);
  // v should match Im z up to the constant fixed by zeta0 = (1, 0)
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j))
        worst = std::max(worst, std::abs(r.v.at(i, j) - dom.node_point(i, j).imag()));
  CHECK(worst <= 1e-9);
}

TEST_CASE("Cauchy-Riemann residual of the built conjugate, calibrated") {
  // analytic pair u = Re z^3, v = Im z^3 on the disk
  for (double h : {1.0 / 32, 1.0 / 64}) {
    GridDomain dom = GridDomain::disk(1.0, h);
    GridField u = GridField::sample(dom, re_z3);
    ConjugateResult r = conjugate_on_grid(u, cplx(0, 0));
    GradientPair gu = grid_gradient(u);
    GradientPair gv = grid_gradient(r.v);
    double worst = 0.0;
    for (int j = 0; j < dom.ny(); ++j)
      for (int i = 0; i < dom.nx(); ++i)
        if (dom.is_interior(i, j)) {
          worst = std::max(worst, std::abs(gv.du_dx.at(i, j) + gu.du_dy.at(i, j)));
          worst = std::max(worst, std::abs(gv.du_dy.at(i, j) - gu.du_dx.at(i, j)));
        }
    CHECK(worst <= 40.0 * h * h);  // calibrated on this fixture
    // the BFS values themselves track Im z^3 at O(h^2)
    double field_err = 0.0;
    for (int j = 0; j < dom.ny(); ++j)
      for (int i = 0; i < dom.nx(); ++i)
        if (dom.in_mask(i, j))
          field_err = std::max(field_err,
                               std::abs(r.v.at(i, j) - im_z3(dom.node_point(i, j))));
    CHECK(field_err <= 2.0 * h * h);
  }
}

TEST_CASE("path independence across homotopic lattice paths") {
  GridDomain dom = GridDomain::square(2.0, 1.0 / 16);
  GridField u = GridField::sample(dom, re_z3);
  // corner-to-corner staircase vs the other corner-to-corner staircase
  const int n = dom.nx() - 1;
  LatticePath east_north, north_east;
  for (int i = 0; i <= n; ++i) east_north.emplace_back(i, 0);
  for (int j = 1; j <= n; ++j) east_north.emplace_back(n, j);
  for (int j = 0; j <= n; ++j) north_east.emplace_back(0, j);
  for (int i = 1; i <= n; ++i) north_east.emplace_back(i, n);
  const double a = conjugate_line_integral(u, east_north);
  const double b = conjugate_line_integral(u, north_east);
  const double h = dom.spacing();
  const double path_len = h * double(east_north.size() - 1);
  CHECK(std::abs(a - b) <= 10.0 * h * h * path_len);
}
