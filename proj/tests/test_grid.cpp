#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lumer/dirichlet.hpp"
#include "lumer/grid.hpp"

using namespace lumer;

TEST_CASE("square mask: counts and classification") {
  GridDomain dom = GridDomain::square(2.0, 0.25);  // 9x9 nodes
  CHECK(dom.nx() == 9);
  CHECK(dom.ny() == 9);
  CHECK(dom.mask_count() == 81);
  CHECK(dom.interior_count() == 49);
  CHECK(dom.is_boundary(0, 4));
  CHECK(dom.is_interior(4, 4));
  CHECK(dom.node_point(4, 4) == cplx(0.0, 0.0));
}

TEST_CASE("disk mask: interior is connected and roughly area-filling") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  const double area = double(dom.mask_count()) * dom.spacing() * dom.spacing();
  CHECK(area == doctest::Approx(pi).epsilon(0.05));
  CHECK(dom.interior_count() > 0);
}

TEST_CASE("annulus mask: hole stays open") {
  GridDomain dom = GridDomain::annulus(0.5, 1.5, 1.0 / 32);
  CHECK_FALSE(dom.in_mask(dom.nx() / 2, dom.ny() / 2));  // center excluded
  GridField r2 = GridField::sample(dom, [](cplx z) { return std::norm(z); });
  CHECK(r2.max_abs() <= (1.5 + 0.5 / 32) * (1.5 + 0.5 / 32) + 1e-12);
}

TEST_CASE("disconnected interiors are rejected") {
  // two 3x3 blobs joined by a one-node bridge: bridge is boundary, so the
  // interiors of the blobs stay separate components
  const char* rows[7] = {
      "1110111",
      "1110111",
      "1111111",
      "1110111",
      "1110111",
      "0000000",
      "0000000",
  };
  std::vector<std::uint8_t> mask;
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) mask.push_back(rows[6 - j][i] == '1');
  CHECK_THROWS_AS(GridDomain(7, 7, 0.1, 0.0, 0.0, std::move(mask)), std::invalid_argument);
}

TEST_CASE("mask with no interior is rejected") {
  std::vector<std::uint8_t> thin(8, 1);  // a 1-wide strip
  CHECK_THROWS_AS(GridDomain(8, 1, 0.1, 0.0, 0.0, std::move(thin)), std::invalid_argument);
}

TEST_CASE("mask file round trip") {
  std::ostringstream file;
  file << "h=0.25 x0=-1 y0=-1\n";
  GridDomain square = GridDomain::square(2.0, 0.25);
  for (int j = 0; j < square.ny(); ++j) {
    for (int i = 0; i < square.nx(); ++i) file << (square.in_mask(i, j) ? '1' : '0');
    file << "\n";
  }
  std::istringstream in(file.str());
  GridDomain dom = GridDomain::read_mask(in);
  CHECK(dom.nx() == square.nx());
  CHECK(dom.spacing() == 0.25);
  CHECK(dom.x0() == -1.0);
  CHECK(dom.mask_count() == square.mask_count());
  CHECK(dom.interior_count() == square.interior_count());
}

TEST_CASE("mask file header and row validation") {
  std::istringstream missing("x0=0 y0=0\n111\n111\n111\n");
  CHECK_THROWS(GridDomain::read_mask(missing));
  std::istringstream ragged("h=1 x0=0 y0=0\n111\n11\n111\n");
  CHECK_THROWS(GridDomain::read_mask(ragged));
  std::istringstream junk("h=1 x0=0 y0=0\n1x1\n111\n111\n");
  CHECK_THROWS(GridDomain::read_mask(junk));
}

TEST_CASE("fields reject non-finite values") {
  GridDomain dom = GridDomain::square(1.0, 0.25);
  CHECK_THROWS_AS(GridField::sample(dom, [](cplx z) { return 1.0 / (z.real() - 0.25); }),
                  std::domain_error);
}

TEST_CASE("bilinear interpolation is exact on bilinear data") {
  GridDomain dom = GridDomain::square(2.0, 0.125);
  GridField f = GridField::sample(dom, [](cplx z) { return 2.0 + z.real() * z.imag(); });
  CHECK(bilinear(f, cplx(0.3, -0.41)) ==
        doctest::Approx(2.0 + 0.3 * -0.41).epsilon(1e-13));
  CHECK_THROWS_AS(bilinear(f, cplx(3.0, 0.0)), std::domain_error);
}

TEST_CASE("dirichlet solve reproduces discrete-harmonic data") {
  GridDomain dom = GridDomain::square(2.0, 1.0 / 16);
  // x^3 - 3 x y^2 has a vanishing 5-point Laplacian (exact on cubics)
  GridField data = GridField::sample(dom, [](cplx z) {
    return std::pow(z.real(), 3) - 3.0 * z.real() * z.imag() * z.imag();
  });
  SolveReport rep;
  GridField sol = solve_laplace_dirichlet(data, &rep);
  CHECK(rep.residual <= 1e-10);
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.is_interior(i, j)) worst = std::max(worst, std::abs(sol.at(i, j) - data.at(i, j)));
  CHECK(worst <= 1e-8);
}

TEST_CASE("dirichlet solve: constant data solves exactly to tolerance") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 16);
  GridField data = GridField::sample(dom, [](cplx) { return -3.25; });
  GridField sol = solve_laplace_dirichlet(data);
  double worst = 0.0;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i)
      if (dom.in_mask(i, j)) worst = std::max(worst, std::abs(sol.at(i, j) + 3.25));
  CHECK(worst <= 1e-8);
}

TEST_CASE("dirichlet solve satisfies the discrete maximum principle") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  GridField data = GridField::sample(dom, [](cplx z) { return std::cos(3.0 * std::arg(z)); });
  GridField sol = solve_laplace_dirichlet(data);
  double bmin = 1e300, bmax = -1e300, imin = 1e300, imax = -1e300;
  for (int j = 0; j < dom.ny(); ++j)
    for (int i = 0; i < dom.nx(); ++i) {
      if (dom.is_boundary(i, j)) {
        bmin = std::min(bmin, data.at(i, j));
        bmax = std::max(bmax, data.at(i, j));
      } else if (dom.is_interior(i, j)) {
        imin = std::min(imin, sol.at(i, j));
        imax = std::max(imax, sol.at(i, j));
      }
    }
  CHECK(imin >= bmin - 1e-9);
  CHECK(imax <= bmax + 1e-9);
}

TEST_CASE("laplacian residual of the solve stays near solver tolerance") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  GridField data = GridField::sample(dom, [](cplx z) { return z.real() * z.real(); });
  GridField sol = solve_laplace_dirichlet(data);
  CHECK(max_laplacian_residual(sol) <= 1e-8);
}

TEST_CASE("solver failure carries the achieved residual") {
  GridDomain dom = GridDomain::disk(1.0, 1.0 / 32);
  GridField data = GridField::sample(dom, [](cplx z) { return z.real(); });
  SolveOptions opt;
  opt.max_iter = 3;  // force a stall
  CHECK_THROWS_AS(solve_laplace_dirichlet(data, nullptr, opt), SolverFailure);
  try {
    solve_laplace_dirichlet(data, nullptr, opt);
  } catch (const SolverFailure& e) {
    CHECK(e.residual() > 1e-10);
    CHECK(e.iterations() == 3);
  }
}
