#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "gio/geometry.hpp"
#include "gio/inverse.hpp"

namespace gio {

/// Linear structural restrictions on the cost vector c.
struct CostConstraintSet {
  Eigen::MatrixXd eq_rows;    // E c = f
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_rows;  // G c >= h
  Eigen::VectorXd ineq_rhs;
  std::vector<int> zero_pattern;                  // indices forced to 0
  std::vector<std::pair<int, double>> lower_bounds;  // c_j >= value
  std::optional<Eigen::MatrixXd> cone_rows;       // c = C'alpha, alpha >= 0

  bool empty() const {
    return eq_rows.rows() == 0 && ineq_rows.rows() == 0 && zero_pattern.empty() &&
           lower_bounds.empty() && !cone_rows.has_value();
  }
};

/// Linear structural restrictions on the perturbation eps.
struct EpsConstraintSet {
  Eigen::MatrixXd eq_rows;    // E eps = f
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_rows;  // G eps >= h
  Eigen::VectorXd ineq_rhs;

  bool empty() const { return eq_rows.rows() == 0 && ineq_rows.rows() == 0; }
};

/// Sign information used to linearize ||c||_1 = 1.
enum class CostSign { NONNEG, FREE };

/// Duality-gap inverse model solved directly as an LP under restrictions on c.
/// FREE sign with an empty set falls back to the row-candidate closed form;
/// FREE with restrictions cannot be linearized and throws SignPatternRequired.
InverseSolution solve_gio_constrained_cost(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                           NormSpec norm, const CostConstraintSet& cc,
                                           CostSign sign = CostSign::NONNEG);

/// p-norm inverse model under restrictions on eps: one projection subproblem
/// per row, reduced to the feasible subset of rows.
InverseSolution solve_gio_constrained_eps(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                          NormSpec norm, const EpsConstraintSet& ec);

/// Variable-selection model: components k..n-1 of c fixed to 0 (first k free).
InverseSolution solve_gio_zero_pattern(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                       NormSpec norm, int k, CostSign sign = CostSign::NONNEG);

/// Per-row restricted projection errors (minimal ||eps||_p landing on row i
/// while staying primal feasible, under the optional eps set); rows without
/// a feasible projection are nullopt. Shared by the eps-constrained solver
/// and the goodness-of-fit denominators.
std::vector<std::optional<double>> per_row_projection_norms(const Polyhedron& poly,
                                                            const Eigen::VectorXd& x_hat,
                                                            NormSpec norm,
                                                            const EpsConstraintSet* ec = nullptr);

/// Feasibility screen for a pinned duality-gap value (ABS_GAP: eps_a = value,
/// REL_GAP: eps_r = value) under the given restrictions and sign pattern.
bool gap_value_feasible(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
                        double value, const CostConstraintSet& cc);

}  // namespace gio
