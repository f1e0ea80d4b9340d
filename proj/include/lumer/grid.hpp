// Mask-based discretization of a plane domain.  A GridDomain is a boolean
// lattice over a bounding rectangle with spacing h; nodes are classified as
// interior (all four lattice neighbors inside the mask), boundary (in the
// mask, but some neighbor outside) or exterior.  The interior must form a
// single edge-connected component.
//
// Mask files are ASCII: a header line `h=<spacing> x0=<real> y0=<real>`
// followed by rows of `0`/`1` characters; row j holds the nodes at
// y = y0 + j*h, column i the nodes at x = x0 + i*h.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lumer/fft.hpp"  // cplx

namespace lumer {

enum class NodeClass : std::uint8_t { exterior = 0, boundary = 1, interior = 2 };

class GridDomain {
 public:
  GridDomain(int nx, int ny, double h, double x0, double y0, std::vector<std::uint8_t> mask)
      : nx_(nx), ny_(ny), h_(h), x0_(x0), y0_(y0), mask_(std::move(mask)) {
    if (nx_ <= 0 || ny_ <= 0) throw std::invalid_argument("grid extents must be positive");
    if (!(h_ > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
    if (mask_.size() != std::size_t(nx_) * std::size_t(ny_))
      throw std::invalid_argument("mask size does not match grid extents");
    classify();
    validate_interior_connectivity();
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double spacing() const { return h_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }

  std::size_t index(int i, int j) const { return std::size_t(j) * nx_ + i; }
  bool in_lattice(int i, int j) const { return i >= 0 && i < nx_ && j >= 0 && j < ny_; }
  bool in_mask(int i, int j) const { return in_lattice(i, j) && mask_[index(i, j)] != 0; }
  NodeClass node_class(int i, int j) const {
    return in_lattice(i, j) ? cls_[index(i, j)] : NodeClass::exterior;
  }
  bool is_interior(int i, int j) const { return node_class(i, j) == NodeClass::interior; }
  bool is_boundary(int i, int j) const { return node_class(i, j) == NodeClass::boundary; }

  cplx node_point(int i, int j) const { return {x0_ + h_ * i, y0_ + h_ * j}; }

  std::size_t mask_count() const { return mask_nodes_; }
  std::size_t interior_count() const { return interior_nodes_; }

  // --- builtin generators -------------------------------------------------
  //
  // Circular masks take nodes within radius + h/2, centering the staircase
  // on the target circle so its signed offset averages out.

  static GridDomain disk(double radius, double h) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk: radius must be positive");
    const int m = int(std::ceil(radius / h)) + 2;
    const int n = 2 * m + 1;
    std::vector<std::uint8_t> mask(std::size_t(n) * n, 0);
    const double cut = radius + 0.5 * h;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double x = h * (i - m), y = h * (j - m);
        if (x * x + y * y < cut * cut) mask[std::size_t(j) * n + i] = 1;
      }
    return GridDomain(n, n, h, -h * m, -h * m, std::move(mask));
  }

  static GridDomain annulus(double r_inner, double r_outer, double h) {
    if (!(0.0 < r_inner && r_inner < r_outer))
      throw std::invalid_argument("annulus: need 0 < r_inner < r_outer");
    const int m = int(std::ceil(r_outer / h)) + 2;
    const int n = 2 * m + 1;
    std::vector<std::uint8_t> mask(std::size_t(n) * n, 0);
    const double outer = r_outer + 0.5 * h, inner = r_inner - 0.5 * h;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double x = h * (i - m), y = h * (j - m);
        const double rr = x * x + y * y;
        if (rr < outer * outer && rr > inner * inner) mask[std::size_t(j) * n + i] = 1;
      }
    return GridDomain(n, n, h, -h * m, -h * m, std::move(mask));
  }

  static GridDomain square(double side, double h) {
    if (!(side > 0.0)) throw std::invalid_argument("square: side must be positive");
    const int m = int(std::round(side / (2.0 * h)));
    if (m < 1) throw std::invalid_argument("square: side too small for spacing");
    const int n = 2 * m + 1;
    return GridDomain(n, n, h, -h * m, -h * m,
                      std::vector<std::uint8_t>(std::size_t(n) * n, 1));
  }

  // --- mask file I/O ------------------------------------------------------

  static GridDomain read_mask(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("mask file: missing header");
    double h = 0.0, x0 = 0.0, y0 = 0.0;
    {
      std::istringstream hs(header);
      std::string tok;
      bool have_h = false, have_x0 = false, have_y0 = false;
      while (hs >> tok) {
        if (tok.rfind("h=", 0) == 0) { h = std::stod(tok.substr(2)); have_h = true; }
        else if (tok.rfind("x0=", 0) == 0) { x0 = std::stod(tok.substr(3)); have_x0 = true; }
        else if (tok.rfind("y0=", 0) == 0) { y0 = std::stod(tok.substr(3)); have_y0 = true; }
        else throw std::runtime_error("mask file: unrecognized header token '" + tok + "'");
      }
      if (!have_h || !have_x0 || !have_y0)
        throw std::runtime_error("mask file: header must set h=, x0= and y0=");
    }
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      rows.push_back(line);
    }
    if (rows.empty()) throw std::runtime_error("mask file: no rows");
    const std::size_t nx = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != nx) throw std::runtime_error("mask file: ragged rows");
    std::vector<std::uint8_t> mask(nx * rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t i = 0; i < nx; ++i) {
        const char c = rows[j][i];
        if (c != '0' && c != '1') throw std::runtime_error("mask file: rows must be 0/1");
        mask[j * nx + i] = (c == '1');
      }
    return GridDomain(int(nx), int(rows.size()), h, x0, y0, std::move(mask));
  }

  static GridDomain read_mask_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mask file: " + path);
    return read_mask(in);
  }

 private:
  void classify() {
    cls_.assign(mask_.size(), NodeClass::exterior);
    mask_nodes_ = interior_nodes_ = 0;
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        if (!in_mask(i, j)) continue;
        ++mask_nodes_;
        const bool interior = in_mask(i - 1, j) && in_mask(i + 1, j) &&
                              in_mask(i, j - 1) && in_mask(i, j + 1);
        cls_[index(i, j)] = interior ? NodeClass::interior : NodeClass::boundary;
        if (interior) ++interior_nodes_;
      }
  }

  void validate_interior_connectivity() {
    if (interior_nodes_ == 0)
      throw std::invalid_argument("grid domain has no interior nodes");
    std::vector<std::uint8_t> seen(mask_.size(), 0);
    std::queue<std::pair<int, int>> q;
    for (int j = 0; j < ny_ && q.empty(); ++j)
      for (int i = 0; i < nx_ && q.empty(); ++i)
        if (is_interior(i, j)) {
          q.emplace(i, j);
          seen[index(i, j)] = 1;
        }
    std::size_t visited = 0;
    while (!q.empty()) {
      auto [i, j] = q.front();
      q.pop();
      ++visited;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const int ii = i + di[d], jj = j + dj[d];
        if (is_interior(ii, jj) && !seen[index(ii, jj)]) {
          seen[index(ii, jj)] = 1;
          q.emplace(ii, jj);
        }
      }
    }
    if (visited != interior_nodes_)
      throw std::invalid_argument("grid interior is not edge-connected");
  }

  int nx_, ny_;
  double h_, x0_, y0_;
  std::vector<std::uint8_t> mask_;
  std::vector<NodeClass> cls_;
  std::size_t mask_nodes_ = 0, interior_nodes_ = 0;
};

// Real scalar field carried on the mask nodes of a GridDomain.  The domain
// must outlive every field sampled on it.
class GridField {
 public:
  explicit GridField(const GridDomain& dom, double fill = 0.0)
      : dom_(&dom), v_(std::size_t(dom.nx()) * dom.ny(), fill) {}

  template <class F>
  static GridField sample(const GridDomain& dom, F&& f) {
    GridField out(dom);
    for (int j = 0; j < dom.ny(); ++j)
      for (int i = 0; i < dom.nx(); ++i)
        if (dom.in_mask(i, j)) out.at(i, j) = f(dom.node_point(i, j));
    out.require_finite();
    return out;
  }

  const GridDomain& domain() const { return *dom_; }
  double at(int i, int j) const { return v_[dom_->index(i, j)]; }
  double& at(int i, int j) { return v_[dom_->index(i, j)]; }

  double max_abs() const {
    double m = 0.0;
    for (int j = 0; j < dom_->ny(); ++j)
      for (int i = 0; i < dom_->nx(); ++i)
        if (dom_->in_mask(i, j)) m = std::max(m, std::abs(at(i, j)));
    return m;
  }

  void require_finite() const {
    for (int j = 0; j < dom_->ny(); ++j)
      for (int i = 0; i < dom_->nx(); ++i)
        if (dom_->in_mask(i, j) && !std::isfinite(at(i, j)))
          throw std::domain_error("grid field carries a non-finite value");
  }

 private:
  const GridDomain* dom_;
  std::vector<double> v_;
};

// Bilinear interpolation from the four surrounding nodes; the cell corners
// must all lie in the mask.
inline double bilinear(const GridField& f, cplx z) {
  const GridDomain& d = f.domain();
  const double fx = (z.real() - d.x0()) / d.spacing();
  const double fy = (z.imag() - d.y0()) / d.spacing();
  int i0 = int(std::floor(fx)), j0 = int(std::floor(fy));
  // points exactly on the last grid line fall back to the final cell
  if (i0 == d.nx() - 1 && fx == double(i0)) --i0;
  if (j0 == d.ny() - 1 && fy == double(j0)) --j0;
  if (!d.in_mask(i0, j0) || !d.in_mask(i0 + 1, j0) || !d.in_mask(i0, j0 + 1) ||
      !d.in_mask(i0 + 1, j0 + 1))
    throw std::domain_error("evaluation point lies outside the gridded interior");
  const double tx = fx - i0, ty = fy - j0;
  return (1 - tx) * (1 - ty) * f.at(i0, j0) + tx * (1 - ty) * f.at(i0 + 1, j0) +
         (1 - tx) * ty * f.at(i0, j0 + 1) + tx * ty * f.at(i0 + 1, j0 + 1);
}

}  // namespace lumer
