#include "gio/constrained.hpp"

#include <cmath>

#include "gio/lp.hpp"

namespace gio {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void validate_cc(const CostConstraintSet& cc, int n) {
  if (cc.eq_rows.rows() != cc.eq_rhs.size() || (cc.eq_rows.rows() > 0 && cc.eq_rows.cols() != n))
    throw DimensionMismatch("cost equality block malformed");
  if (cc.ineq_rows.rows() != cc.ineq_rhs.size() ||
      (cc.ineq_rows.rows() > 0 && cc.ineq_rows.cols() != n))
    throw DimensionMismatch("cost inequality block malformed");
  for (int j : cc.zero_pattern)
    if (j < 0 || j >= n) throw DimensionMismatch("zero_pattern index out of range");
  for (const auto& [j, v] : cc.lower_bounds) {
    (void)v;
    if (j < 0 || j >= n) throw DimensionMismatch("lower_bounds index out of range");
  }
  if (cc.cone_rows && (cc.cone_rows->cols() != n || cc.cone_rows->rows() == 0))
    throw DimensionMismatch("cone_rows malformed");
}

void fill_result_from_duals(InverseSolution& sol, const Polyhedron& poly) {
  int best = 0;
  for (int i = 0; i < poly.num_rows(); ++i) {
    if (sol.y_star(i) > sol.y_star(best) + 1e-12) best = i;
    if (sol.y_star(i) > 1e-9) sol.tie_rows.push_back(i);
  }
  sol.i_star = best;
}

InverseSolution solve_abs_gap_cost(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                   const CostConstraintSet& cc) {
  const int m = poly.num_rows();
  const int n = poly.dim();
  const int ncone = cc.cone_rows ? static_cast<int>(cc.cone_rows->rows()) : 0;
  // Variables [y(m), c(n), eps_a, alpha(ncone)].
  lp::Problem p = lp::Problem::make(m + n + 1 + ncone);
  for (int i = 0; i < m; ++i) p.lower(i) = 0.0;
  for (int j = 0; j < n; ++j) p.lower(m + j) = 0.0;
  for (const auto& [j, v] : cc.lower_bounds) p.lower(m + j) = std::max(0.0, v);
  for (int j : cc.zero_pattern) {
    p.lower(m + j) = 0.0;
    p.upper(m + j) = 0.0;
  }
  for (int k = 0; k < ncone; ++k) p.lower(m + n + 1 + k) = 0.0;
  p.objective(m + n) = 1.0;

  auto crow = [&](const Eigen::VectorXd& coef) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row.segment(m, n) = coef;
    return row;
  };
  for (int j = 0; j < n; ++j) {  // A'y = c
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row.head(m) = poly.rows().col(j);
    row(m + j) = -1.0;
    p.add_row(row, lp::Sense::EQ, 0.0);
  }
  {
    Eigen::VectorXd row = crow(x_hat);  // c'x_hat - b'y = eps_a
    row.head(m) = -poly.rhs();
    row(m + n) = -1.0;
    p.add_row(row, lp::Sense::EQ, 0.0);
  }
  p.add_row(crow(Eigen::VectorXd::Ones(n)), lp::Sense::EQ, 1.0);  // ||c||_1 = 1 under c >= 0
  for (int i = 0; i < cc.eq_rows.rows(); ++i)
    p.add_row(crow(cc.eq_rows.row(i).transpose()), lp::Sense::EQ, cc.eq_rhs(i));
  for (int i = 0; i < cc.ineq_rows.rows(); ++i)
    p.add_row(crow(cc.ineq_rows.row(i).transpose()), lp::Sense::GE, cc.ineq_rhs(i));
  if (ncone > 0) {
    for (int j = 0; j < n; ++j) {  // c = C'alpha
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row(m + j) = 1.0;
      row.tail(ncone) = -cc.cone_rows->col(j);
      p.add_row(row, lp::Sense::EQ, 0.0);
    }
  }

  lp::Solution s = lp::solve(p);
  if (!s.optimal())
    throw ConstraintInfeasible("no (y, c) satisfies the cost constraint set");

  InverseSolution sol;
  sol.norm = {NormVariant::ABS_GAP};
  sol.y_star = s.x.head(m);
  sol.c_star = s.x.segment(m, n);
  sol.gap_value = s.x(m + n);
  sol.loss = *sol.gap_value;
  sol.eps_star =
      *sol.gap_value * sol.c_star.unaryExpr([](double v) { return sgn(v); });
  sol.x_star = x_hat - sol.eps_star;
  fill_result_from_duals(sol, poly);
  return sol;
}

InverseSolution solve_rel_gap_cost(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                   const CostConstraintSet& cc) {
  const int m = poly.num_rows();
  const int n = poly.dim();
  const int ncone = cc.cone_rows ? static_cast<int>(cc.cone_rows->rows()) : 0;
  const Eigen::RowVectorXd ones = Eigen::RowVectorXd::Ones(n);

  struct Branch {
    bool ok = false;
    Eigen::VectorXd y, c;
    double eps_r = 0.0, loss = 0.0;
  };

  // |b'y| = 1 normalization; constraints on the normalized c are homogenized
  // exactly via ||c||_1 = 1'c (valid under the nonnegative sign pattern).
  auto run_branch = [&](double sign) {
    Branch out;
    // Variables [y(m), c(n), eps_r, t, alpha(ncone)].
    lp::Problem p = lp::Problem::make(m + n + 2 + ncone);
    for (int i = 0; i < m; ++i) p.lower(i) = 0.0;
    for (int j = 0; j < n; ++j) p.lower(m + j) = 0.0;
    for (int j : cc.zero_pattern) p.upper(m + j) = 0.0;
    p.lower(m + n + 1) = 0.0;
    for (int k = 0; k < ncone; ++k) p.lower(m + n + 2 + k) = 0.0;
    p.objective(m + n + 1) = 1.0;

    auto crow = [&](const Eigen::RowVectorXd& coef) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row.segment(m, n) = coef.transpose();
      return row;
    };
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row.head(m) = poly.rows().col(j);
      row(m + j) = -1.0;
      p.add_row(row, lp::Sense::EQ, 0.0);
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row.head(m) = poly.rhs();
      p.add_row(row, lp::Sense::EQ, sign);  // b'y = sign
    }
    {
      Eigen::VectorXd row = crow(x_hat.transpose());
      row(m + n) = -sign;
      p.add_row(row, lp::Sense::EQ, 0.0);  // c'x_hat = eps_r * b'y
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row(m + n) = -1.0;
      row(m + n + 1) = 1.0;
      p.add_row(row, lp::Sense::GE, -1.0);
    }
    {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row(m + n) = 1.0;
      row(m + n + 1) = 1.0;
      p.add_row(row, lp::Sense::GE, 1.0);
    }
    for (int i = 0; i < cc.eq_rows.rows(); ++i)
      p.add_row(crow(cc.eq_rows.row(i) - cc.eq_rhs(i) * ones), lp::Sense::EQ, 0.0);
    for (int i = 0; i < cc.ineq_rows.rows(); ++i)
      p.add_row(crow(cc.ineq_rows.row(i) - cc.ineq_rhs(i) * ones), lp::Sense::GE, 0.0);
    for (const auto& [j, v] : cc.lower_bounds) {
      Eigen::RowVectorXd coef = -v * ones;
      coef(j) += 1.0;
      p.add_row(crow(coef), lp::Sense::GE, 0.0);
    }
    if (ncone > 0) {
      for (int j = 0; j < n; ++j) {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
        row(m + j) = 1.0;
        row.tail(ncone) = -cc.cone_rows->col(j);
        p.add_row(row, lp::Sense::EQ, 0.0);
      }
    }
    lp::Solution s = lp::solve(p);
    if (!s.optimal()) return out;
    out.y = s.x.head(m);
    out.c = s.x.segment(m, n);
    out.eps_r = s.x(m + n);
    out.loss = s.objective_value;
    out.ok = out.c.cwiseAbs().sum() > 1e-10;
    return out;
  };

  const Branch plus = run_branch(1.0);
  const Branch minus = run_branch(-1.0);
  Branch chosen;
  if (plus.ok && (!minus.ok || plus.loss <= minus.loss)) chosen = plus;
  else if (minus.ok) chosen = minus;
  else throw ConstraintInfeasible("no (y, c) satisfies the cost constraint set");

  const double c1 = chosen.c.cwiseAbs().sum();
  InverseSolution sol;
  sol.norm = {NormVariant::REL_GAP};
  sol.c_star = chosen.c / c1;
  sol.y_star = chosen.y / c1;
  sol.gap_value = chosen.eps_r;
  sol.loss = chosen.loss;
  const double by = poly.rhs().dot(sol.y_star);
  sol.eps_star = by * (chosen.eps_r - 1.0) *
                 sol.c_star.unaryExpr([](double v) { return sgn(v); });
  sol.x_star = x_hat - sol.eps_star;
  fill_result_from_duals(sol, poly);
  return sol;
}

struct RowProjection {
  Eigen::VectorXd eps;
  double value = 0.0;
};

// Single-row subproblem: minimize ||eps||_p subject to A(x_hat - eps) >= b,
// a_i'(x_hat - eps) = b_i, and eps in the given set.
std::optional<RowProjection> project_row(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                         NormSpec norm, int i, const EpsConstraintSet* ec) {
  const int m = poly.num_rows();
  const int n = poly.dim();
  const Eigen::VectorXd s = poly.rows() * x_hat - poly.rhs();

  if (norm.variant == NormVariant::P2) {
    lp::ExtraConstraints extra;
    extra.eq_rows.resize(0, n);
    extra.ineq_rows.resize(0, n);
    if (ec && !ec->empty()) {
      // eps = x_hat - x: E eps = f becomes E x = E x_hat - f,
      // G eps >= h becomes -G x >= h - G x_hat.
      if (ec->eq_rows.rows() > 0) {
        extra.eq_rows = ec->eq_rows;
        extra.eq_rhs = ec->eq_rows * x_hat - ec->eq_rhs;
      }
      if (ec->ineq_rows.rows() > 0) {
        extra.ineq_rows = -ec->ineq_rows;
        extra.ineq_rhs = ec->ineq_rhs - ec->ineq_rows * x_hat;
      }
    }
    try {
      const Eigen::VectorXd x =
          lp::solve_qp_projection(poly.rows(), poly.rhs(), i, x_hat,
                                  (ec && !ec->empty()) ? &extra : nullptr);
      RowProjection rp;
      rp.eps = x_hat - x;
      rp.value = rp.eps.norm();
      return rp;
    } catch (const EmptyFace&) {
      return std::nullopt;
    }
  }

  // P1 / PINF as LPs over [eps(n), aux].
  const bool p1 = norm.variant == NormVariant::P1;
  const int naux = p1 ? n : 1;
  lp::Problem p = lp::Problem::make(n + naux);
  for (int k = 0; k < naux; ++k) {
    p.lower(n + k) = 0.0;
    p.objective(n + k) = 1.0;
  }
  for (int j = 0; j < n; ++j) {  // aux bounds |eps_j| <= u_j (or t)
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row(j) = -1.0;
    row(n + (p1 ? j : 0)) = 1.0;
    p.add_row(row, lp::Sense::GE, 0.0);
    row(j) = 1.0;
    p.add_row(row, lp::Sense::GE, 0.0);
  }
  for (int r = 0; r < m; ++r) {  // A eps <= slack
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row.head(n) = poly.row(r);
    p.add_row(row, r == i ? lp::Sense::EQ : lp::Sense::LE, s(r));
  }
  if (ec) {
    for (int r = 0; r < ec->eq_rows.rows(); ++r) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row.head(n) = ec->eq_rows.row(r).transpose();
      p.add_row(row, lp::Sense::EQ, ec->eq_rhs(r));
    }
    for (int r = 0; r < ec->ineq_rows.rows(); ++r) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row.head(n) = ec->ineq_rows.row(r).transpose();
      p.add_row(row, lp::Sense::GE, ec->ineq_rhs(r));
    }
  }
  lp::Solution sol = lp::solve(p);
  if (!sol.optimal()) return std::nullopt;
  RowProjection rp;
  rp.eps = sol.x.head(n);
  rp.value = sol.objective_value;
  return rp;
}

}  // namespace

InverseSolution solve_gio_constrained_cost(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                           NormSpec norm, const CostConstraintSet& cc,
                                           CostSign sign) {
  if (!norm.is_duality_gap())
    throw InvalidInput("cost constraints require a duality-gap variant (abs or rel); "
                       "p-norm models do not admit the linearized formulation");
  validate_cc(cc, poly.dim());
  if (classify(poly, x_hat) == PointClass::INFEASIBLE)
    throw InfeasiblePoint("observed point lies outside the feasible region");
  if (sign == CostSign::FREE) {
    if (cc.empty()) return solve_gio(poly, x_hat, norm);  // row-candidate fallback
    throw SignPatternRequired("||c||_1 = 1 cannot be linearized without a sign pattern");
  }
  if (norm.variant == NormVariant::ABS_GAP) return solve_abs_gap_cost(poly, x_hat, cc);
  return solve_rel_gap_cost(poly, x_hat, cc);
}

InverseSolution solve_gio_constrained_eps(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                          NormSpec norm, const EpsConstraintSet& ec) {
  if (norm.is_duality_gap())
    throw InvalidInput("eps constraints pair with the p-norm variants (p1, p2, pinf)");
  if (ec.eq_rows.rows() != ec.eq_rhs.size() ||
      (ec.eq_rows.rows() > 0 && ec.eq_rows.cols() != poly.dim()) ||
      ec.ineq_rows.rows() != ec.ineq_rhs.size() ||
      (ec.ineq_rows.rows() > 0 && ec.ineq_rows.cols() != poly.dim()))
    throw DimensionMismatch("eps constraint blocks malformed");
  if (classify(poly, x_hat) == PointClass::INFEASIBLE)
    throw InfeasiblePoint("observed point lies outside the feasible region");

  int best = -1;
  RowProjection best_rp;
  std::vector<int> feasible_rows;
  for (int i = 0; i < poly.num_rows(); ++i) {
    auto rp = project_row(poly, x_hat, norm, i, &ec);
    if (!rp) continue;
    feasible_rows.push_back(i);
    if (best < 0 || rp->value < best_rp.value - 1e-9 * std::max(1.0, best_rp.value)) {
      best = i;
      best_rp = *rp;
    }
  }
  if (best < 0)
    throw NoFeasibleProjection("no constraint admits a feasible projection under the eps set");

  const Eigen::VectorXd a = poly.row(best);
  const double norm1 = a.cwiseAbs().sum();
  InverseSolution sol;
  sol.norm = norm;
  sol.i_star = best;
  sol.tie_rows = std::move(feasible_rows);  // the feasible set I-hat
  sol.y_star = Eigen::VectorXd::Zero(poly.num_rows());
  sol.y_star(best) = 1.0 / norm1;
  sol.c_star = a / norm1;
  sol.eps_star = best_rp.eps;
  sol.x_star = x_hat - sol.eps_star;
  sol.loss = best_rp.value;
  return sol;
}

InverseSolution solve_gio_zero_pattern(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                       NormSpec norm, int k, CostSign sign) {
  if (k < 1 || k > poly.dim()) throw InvalidInput("zero-pattern k must satisfy 1 <= k <= n");
  CostConstraintSet cc;
  for (int j = k; j < poly.dim(); ++j) cc.zero_pattern.push_back(j);
  return solve_gio_constrained_cost(poly, x_hat, norm, cc, sign);
}

std::vector<std::optional<double>> per_row_projection_norms(const Polyhedron& poly,
                                                            const Eigen::VectorXd& x_hat,
                                                            NormSpec norm,
                                                            const EpsConstraintSet* ec) {
  std::vector<std::optional<double>> out(poly.num_rows());
  for (int i = 0; i < poly.num_rows(); ++i) {
    auto rp = project_row(poly, x_hat, norm, i, ec);
    if (rp) out[i] = rp->value;
  }
  return out;
}

bool gap_value_feasible(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
                        double value, const CostConstraintSet& cc) {
  if (!norm.is_duality_gap()) throw InvalidInput("gap screen applies to abs/rel variants");
  validate_cc(cc, poly.dim());
  const int m = poly.num_rows();
  const int n = poly.dim();
  const int ncone = cc.cone_rows ? static_cast<int>(cc.cone_rows->rows()) : 0;
  lp::Problem p = lp::Problem::make(m + n + ncone);
  for (int i = 0; i < p.num_vars(); ++i) p.lower(i) = 0.0;
  for (const auto& [j, v] : cc.lower_bounds) p.lower(m + j) = std::max(0.0, v);
  for (int j : cc.zero_pattern) p.upper(m + j) = 0.0;

  auto crow = [&](const Eigen::VectorXd& coef) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row.segment(m, n) = coef;
    return row;
  };
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
    row.head(m) = poly.rows().col(j);
    row(m + j) = -1.0;
    p.add_row(row, lp::Sense::EQ, 0.0);
  }
  p.add_row(crow(Eigen::VectorXd::Ones(n)), lp::Sense::EQ, 1.0);
  {
    Eigen::VectorXd row = crow(x_hat);
    if (norm.variant == NormVariant::ABS_GAP) {
      row.head(m) = -poly.rhs();  // c'x_hat - b'y = value
      p.add_row(row, lp::Sense::EQ, value);
    } else {
      row.head(m) = -value * poly.rhs();  // c'x_hat = value * b'y
      p.add_row(row, lp::Sense::EQ, 0.0);
    }
  }
  for (int i = 0; i < cc.eq_rows.rows(); ++i)
    p.add_row(crow(cc.eq_rows.row(i).transpose()), lp::Sense::EQ, cc.eq_rhs(i));
  for (int i = 0; i < cc.ineq_rows.rows(); ++i)
    p.add_row(crow(cc.ineq_rows.row(i).transpose()), lp::Sense::GE, cc.ineq_rhs(i));
  if (ncone > 0) {
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(p.num_vars());
      row(m + j) = 1.0;
      row.tail(ncone) = -cc.cone_rows->col(j);
      p.add_row(row, lp::Sense::EQ, 0.0);
    }
  }
  return lp::solve(p).optimal();
}

}  // namespace gio
