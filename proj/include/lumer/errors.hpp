#pragma once

#include <stdexcept>
#include <string>

namespace lumer {

// A harmonic conjugate does not exist: some circulation (period) around a
// hole of the domain stays above tolerance.
class ExistenceFailure : public std::runtime_error {
 public:
  ExistenceFailure(double period, double tolerance)
      : std::runtime_error("harmonic conjugate does not exist: period " +
                           std::to_string(period) + " exceeds tolerance " +
                           std::to_string(tolerance)),
        period_(period),
        tolerance_(tolerance) {}

  double period() const { return period_; }
  double tolerance() const { return tolerance_; }

 private:
  double period_;
  double tolerance_;
};

// Ratio experiments reject the zero function instead of reporting 0/0.
class DegenerateZero : public std::runtime_error {
 public:
  DegenerateZero() : std::runtime_error("ratio undefined for the zero function") {}
};

// Iterative solve hit its iteration cap before reaching tolerance.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(double residual, std::size_t iterations)
      : std::runtime_error("Dirichlet solve stalled at relative residual " +
                           std::to_string(residual) + " after " +
                           std::to_string(iterations) + " iterations"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const { return residual_; }
  std::size_t iterations() const { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

}  // namespace lumer
