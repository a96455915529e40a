#include "gio/inverse.hpp"

#include <cmath>
#include <limits>

#include "gio/lp.hpp"

namespace gio {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

/// Ratios (a_i'x_hat - b_i)/||a_i||_L^D; REL_GAP rows with b_i = 0 get NaN.
Eigen::VectorXd loss_ratios(const Polyhedron& poly, const Eigen::VectorXd& s, NormSpec norm) {
  Eigen::VectorXd r(poly.num_rows());
  for (int i = 0; i < poly.num_rows(); ++i) {
    const double b = poly.rhs()(i);
    if (norm.variant == NormVariant::REL_GAP && b == 0.0) {
      r(i) = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    r(i) = s(i) / dual_norm_of_row(poly.row(i), norm, b);
  }
  return r;
}

}  // namespace

InverseSolution solve_gio(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                          NormSpec norm, double tol) {
  const Eigen::VectorXd s = slack(poly, x_hat);
  if (classify(poly, x_hat, tol) == PointClass::INFEASIBLE)
    throw InfeasiblePoint("observed point lies outside the feasible region");

  Eigen::VectorXd ratios = loss_ratios(poly, s, norm);
  // Rows already tight within tol are exact fits.
  for (int i = 0; i < poly.num_rows(); ++i)
    if (!std::isnan(ratios(i)) && std::abs(s(i)) <= tol) ratios(i) = 0.0;

  int best = -1;
  for (int i = 0; i < poly.num_rows(); ++i) {
    if (std::isnan(ratios(i))) continue;
    if (best < 0 || ratios(i) < ratios(best)) best = i;
  }
  if (best < 0) throw RelGapZeroRhs("every row has b_i = 0; relative gap undefined");

  InverseSolution sol;
  sol.norm = norm;
  sol.i_star = best;
  const double min_ratio = ratios(best);
  for (int i = 0; i < poly.num_rows(); ++i) {
    if (std::isnan(ratios(i))) continue;
    if (ratios(i) <= min_ratio + 1e-9 * std::max(1.0, std::abs(min_ratio)))
      sol.tie_rows.push_back(i);
  }

  const Eigen::VectorXd a = poly.row(best);
  const double b = poly.rhs()(best);
  const double norm1 = a.cwiseAbs().sum();
  sol.y_star = Eigen::VectorXd::Zero(poly.num_rows());
  sol.y_star(best) = 1.0 / norm1;
  sol.c_star = a / norm1;
  sol.loss = min_ratio;
  sol.eps_star = min_ratio * v_maximizer(a, norm, b);
  sol.x_star = x_hat - sol.eps_star;
  if (norm.variant == NormVariant::ABS_GAP) sol.gap_value = s(best) / norm1;
  if (norm.variant == NormVariant::REL_GAP) sol.gap_value = a.dot(x_hat) / b;
  return sol;
}

std::vector<Eigen::VectorXd> candidate_costs(const Polyhedron& poly) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(poly.num_rows());
  for (int i = 0; i < poly.num_rows(); ++i) {
    const Eigen::VectorXd a = poly.row(i);
    out.push_back(a / a.cwiseAbs().sum());
  }
  return out;
}

InverseSolution solve_relative_gap_lp(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                      bool nonneg_cost) {
  if (classify(poly, x_hat) == PointClass::INFEASIBLE)
    throw InfeasiblePoint("observed point lies outside the feasible region");

  const int m = poly.num_rows();
  const int n = poly.dim();
  const Eigen::MatrixXd& A = poly.rows();
  const Eigen::VectorXd& b = poly.rhs();

  struct Branch {
    bool ok = false;
    Eigen::VectorXd y, c;
    double eps_r = 0.0, loss = 0.0;
  };

  // Variables [y(m), c(n), eps_r, t]; minimize t = |eps_r - 1|.
  auto run_branch = [&](double sign) {
    Branch out;
    lp::Problem p = lp::Problem::make(m + n + 2);
    for (int i = 0; i < m; ++i) p.lower(i) = 0.0;
    p.lower(m + n + 1) = 0.0;
    p.objective(m + n + 1) = 1.0;
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n + 2);
      row.head(m) = A.col(j);
      row(m + j) = -1.0;
      p.add_row(row, lp::Sense::EQ, 0.0);  // A'y = c
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n + 2);
      row.head(m) = b;
      p.add_row(row, lp::Sense::EQ, sign);  // b'y = sign
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n + 2);
      row.segment(m, n) = x_hat;
      row(m + n) = -sign;
      p.add_row(row, lp::Sense::EQ, 0.0);  // c'x_hat = eps_r * b'y
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n + 2);
      row(m + n) = -1.0;
      row(m + n + 1) = 1.0;
      p.add_row(row, lp::Sense::GE, -1.0);  // t >= eps_r - 1
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n + 2);
      row(m + n) = 1.0;
      row(m + n + 1) = 1.0;
      p.add_row(row, lp::Sense::GE, 1.0);  // t >= 1 - eps_r
    }
    lp::Solution s = lp::solve(p);
    if (!s.optimal()) return out;
    out.y = s.x.head(m);
    out.c = s.x.segment(m, n);
    out.eps_r = s.x(m + n);
    out.loss = s.objective_value;
    out.ok = out.c.cwiseAbs().sum() > 1e-10;  // c = 0 vertices carry no cost information
    return out;
  };

  // Variables [y(m), c(n) >= 0]; minimize c'x_hat with b'y = 1 (positive rhs case).
  auto run_single = [&]() {
    Branch out;
    lp::Problem p = lp::Problem::make(m + n);
    p.lower.setZero();
    p.objective.tail(n) = x_hat;
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n);
      row.head(m) = A.col(j);
      row(m + j) = -1.0;
      p.add_row(row, lp::Sense::EQ, 0.0);
    }
    Eigen::VectorXd row = Eigen::VectorXd::Zero(m + n);
    row.head(m) = b;
    p.add_row(row, lp::Sense::GE, 1.0);
    p.add_row(row, lp::Sense::LE, 1.0);
    lp::Solution s = lp::solve(p);
    if (!s.optimal()) return out;
    out.y = s.x.head(m);
    out.c = s.x.tail(n);
    out.eps_r = s.objective_value;  // c'x_hat with b'y = 1
    out.loss = std::abs(out.eps_r - 1.0);
    out.ok = out.c.cwiseAbs().sum() > 1e-10;
    return out;
  };

  Branch chosen;
  if (nonneg_cost && b.minCoeff() > 0.0) {
    chosen = run_single();
    if (!chosen.ok) throw BothBranchesInfeasible("positive-rhs relative-gap program infeasible");
  } else {
    const Branch plus = run_branch(1.0);
    const Branch minus = run_branch(-1.0);
    if (plus.ok && (!minus.ok || plus.loss <= minus.loss)) chosen = plus;
    else if (minus.ok) chosen = minus;
    else throw BothBranchesInfeasible("both b'y = +1 and b'y = -1 programs are infeasible");
  }

  const double c1 = chosen.c.cwiseAbs().sum();
  InverseSolution sol;
  sol.norm = {NormVariant::REL_GAP};
  sol.c_star = chosen.c / c1;
  sol.y_star = chosen.y / c1;
  sol.gap_value = chosen.eps_r;
  sol.loss = chosen.loss;
  const double by = b.dot(sol.y_star);
  sol.eps_star = by * (chosen.eps_r - 1.0) *
                 sol.c_star.unaryExpr([](double v) { return sgn(v); });
  sol.x_star = x_hat - sol.eps_star;
  int best = 0;
  for (int i = 0; i < m; ++i) {
    if (sol.y_star(i) > sol.y_star(best) + 1e-12) best = i;
    if (sol.y_star(i) > 1e-9) sol.tie_rows.push_back(i);
  }
  sol.i_star = best;
  return sol;
}

bool classical_io_feasible(const Polyhedron& poly, const Eigen::VectorXd& x_hat, double tol) {
  const PointClass c = classify(poly, x_hat, tol);
  if (c == PointClass::BOUNDARY) return true;
  if (c == PointClass::INTERIOR) return false;
  return slack(poly, x_hat).maxCoeff() >= 0.0;  // mixed-sign infeasible case
}

}  // namespace gio
