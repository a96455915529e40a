#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gio/geometry.hpp"

namespace gio {

/// Result of a generalized inverse solve: imputed duals, cost, perturbation,
/// the active row, and the projected point x* = x_hat - eps*.
struct InverseSolution {
  Eigen::VectorXd y_star;
  Eigen::VectorXd c_star;    // ||c*||_1 = 1
  Eigen::VectorXd eps_star;
  Eigen::VectorXd x_star;
  int i_star = -1;                 // smallest argmin row
  std::vector<int> tie_rows;       // all rows attaining the minimal ratio
  double loss = 0.0;               // ||eps*||_L
  std::optional<double> gap_value; // eps_a* (ABS_GAP) or eps_r* (REL_GAP)
  NormSpec norm;
};

/// Closed-form solve of the generalized inverse model for a feasible point.
InverseSolution solve_gio(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                          NormSpec norm, double tol = kBoundaryTol);

/// The m candidate cost vectors a_i / ||a_i||_1.
std::vector<Eigen::VectorXd> candidate_costs(const Polyhedron& poly);

/// Relative-gap model solved through its LP reformulation: two normalization
/// branches (b'y = +-1), or the single positive-rhs program when nonneg_cost
/// is set and every b_i > 0. Results are rescaled to ||c||_1 = 1.
InverseSolution solve_relative_gap_lp(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                      bool nonneg_cost = false);

/// Feasibility of the classical inverse model (exact-optimality version).
bool classical_io_feasible(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                           double tol = kBoundaryTol);

}  // namespace gio
