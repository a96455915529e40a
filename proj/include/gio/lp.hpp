#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "gio/errors.hpp"

namespace gio::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { GE, LE, EQ };

enum class Status { OPTIMAL, INFEASIBLE, UNBOUNDED, ITERATION_LIMIT };

/// Dense LP: minimize objective'x subject to row senses and variable bounds.
struct Problem {
  Eigen::VectorXd objective;
  Eigen::MatrixXd rows;  // m x n, m may be 0
  std::vector<Sense> senses;
  Eigen::VectorXd rhs;
  Eigen::VectorXd lower;  // -inf allowed
  Eigen::VectorXd upper;  // +inf allowed

  /// n free variables, zero objective, no rows.
  static Problem make(int num_vars);
  void add_row(const Eigen::VectorXd& coeffs, Sense sense, double rhs_value);
  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }
};

struct Options {
  double feas_tol = 1e-8;
  int max_iters = 10000;
};

struct Solution {
  Status status = Status::INFEASIBLE;
  Eigen::VectorXd x;
  double objective_value = 0.0;
  int iterations = 0;
  Eigen::VectorXd row_duals;     // one multiplier per original row
  double duality_gap = 0.0;      // |primal - dual| of the standard-form pair
  double min_reduced_cost = 0.0; // optimality certificate (>= -tol at optimum)

  bool optimal() const { return status == Status::OPTIMAL; }
};

/// Two-phase primal simplex with Bland's anti-cycling rule. Deterministic:
/// identical inputs yield identical bases.
Solution solve(const Problem& p, const Options& opts = {});

/// Extra linear conditions for face projections (x-space).
struct ExtraConstraints {
  Eigen::MatrixXd eq_rows;    // E x = f
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd ineq_rows;  // G x >= h
  Eigen::VectorXd ineq_rhs;

  bool empty() const { return eq_rows.rows() == 0 && ineq_rows.rows() == 0; }
};

/// Nearest point (2-norm) to x_hat on the face {x : rows x >= rhs, a_i'x = b_i},
/// optionally intersected with extra conditions. Active-set loop over
/// equality-constrained least squares; throws EmptyFace when the face is empty.
Eigen::VectorXd solve_qp_projection(const Eigen::MatrixXd& rows, const Eigen::VectorXd& rhs,
                                    int eq_row, const Eigen::VectorXd& x_hat,
                                    const ExtraConstraints* extra = nullptr);

}  // namespace gio::lp
