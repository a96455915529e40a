#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gio/constrained.hpp"
#include "gio/geometry.hpp"

namespace gio {

struct PerRowFit {
  int row = 0;
  std::optional<double> eps_norm;  // feasible-projection error ||eps^i||_L
  double eps_tilde_norm = 0.0;     // hyperplane distance ||eps~^i||_L
  bool included_in_denominator = false;
};

/// Coefficient of complementarity rho and its lower bound rho~ for one point.
struct FitReport {
  NormSpec variant;
  double rho = 1.0;
  double rho_tilde = 1.0;
  double loss_star = 0.0;
  double denominator = 0.0;
  double denominator_tilde = 0.0;
  std::vector<PerRowFit> per_row;
  bool negative_rho_warning = false;
};

struct StructuralConstraints {
  std::optional<CostConstraintSet> cost;
  std::optional<EpsConstraintSet> eps;

  bool empty() const { return !cost && !eps; }
};

/// Full fit report. With constraints and adjust_denominator set, rows whose
/// per-row error is infeasible under the set are excluded from rho's
/// denominator; rho~'s denominator always uses plain hyperplane distances.
FitReport rho(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
              const StructuralConstraints* constraints = nullptr,
              bool adjust_denominator = false);

/// The cheap lower bound alone (no per-row solver calls).
double rho_tilde(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
                 const StructuralConstraints* constraints = nullptr);

struct GridPoint {
  double x1 = 0.0, x2 = 0.0;
  double rho = 0.0, rho_tilde = 0.0;
};

/// Samples the bounding box of a bounded 2-D polyhedron and evaluates both
/// metrics at every feasible grid point (row-major, deterministic order).
std::vector<GridPoint> rho_grid(const Polyhedron& poly, NormSpec norm, int resolution);

/// CSV with header x1,x2,rho,rho_tilde.
void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& grid, int sig_digits = 6);

}  // namespace gio
