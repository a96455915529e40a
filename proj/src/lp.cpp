#include "gio/lp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace gio::lp {

Problem Problem::make(int num_vars) {
  if (num_vars < 1) throw InvalidInput("LP needs at least one variable");
  Problem p;
  p.objective = Eigen::VectorXd::Zero(num_vars);
  p.rows.resize(0, num_vars);
  p.rhs.resize(0);
  p.lower = Eigen::VectorXd::Constant(num_vars, -kInf);
  p.upper = Eigen::VectorXd::Constant(num_vars, kInf);
  return p;
}

void Problem::add_row(const Eigen::VectorXd& coeffs, Sense sense, double rhs_value) {
  if (coeffs.size() != objective.size()) throw DimensionMismatch("row length != num_vars");
  rows.conservativeResize(rows.rows() + 1, objective.size());
  rows.row(rows.rows() - 1) = coeffs.transpose();
  rhs.conservativeResize(rhs.size() + 1);
  rhs(rhs.size() - 1) = rhs_value;
  senses.push_back(sense);
}

namespace {

constexpr double kPivotEps = 1e-9;

// How each original variable maps into standard-form columns:
//   x = offset + scale * z[col]          (single column)
//   x = z[col] - z[neg_col]              (free split)
//   x = offset                           (fixed, no column)
struct VarMap {
  double offset = 0.0;
  double scale = 1.0;
  int col = -1;
  int neg_col = -1;
  bool fixed = false;
};

struct StdForm {
  Eigen::MatrixXd E;  // m x n_struct, equalities E z = f, z >= 0
  Eigen::VectorXd f;
  Eigen::VectorXd c;  // phase-2 costs over z
  std::vector<VarMap> vars;
  std::vector<int> orig_row_of;     // std row -> original row index, -1 for bound rows
  std::vector<double> dual_scale;   // std dual -> original dual multiplier
  std::vector<int> dropped_rows;    // original rows eliminated as trivial
  bool infeasible = false;          // detected during construction
};

StdForm build_standard_form(const Problem& p) {
  const int n = p.num_vars();
  const int m = p.num_rows();
  StdForm sf;
  sf.vars.resize(n);

  int n_cols = 0;
  std::vector<int> bounded_cols;  // columns needing z <= u - l rows
  std::vector<double> bounded_range;
  for (int j = 0; j < n; ++j) {
    const double l = p.lower(j), u = p.upper(j);
    VarMap& vm = sf.vars[j];
    if (l > u) {
      sf.infeasible = true;
      return sf;
    }
    if (std::isfinite(l) && std::isfinite(u) && l == u) {
      vm.fixed = true;
      vm.offset = l;
    } else if (std::isfinite(l) && std::isfinite(u)) {
      vm.offset = l;
      vm.scale = 1.0;
      vm.col = n_cols++;
      bounded_cols.push_back(vm.col);
      bounded_range.push_back(u - l);
    } else if (std::isfinite(l)) {
      vm.offset = l;
      vm.scale = 1.0;
      vm.col = n_cols++;
    } else if (std::isfinite(u)) {
      vm.offset = u;
      vm.scale = -1.0;
      vm.col = n_cols++;
    } else {
      vm.col = n_cols++;
      vm.neg_col = n_cols++;
    }
  }

  const int n_bound_rows = static_cast<int>(bounded_cols.size());
  int n_slack = n_bound_rows;  // each bound row gets a slack
  for (int i = 0; i < m; ++i)
    if (p.senses[i] != Sense::EQ) ++n_slack;

  const int m_std = m + n_bound_rows;
  const int n_struct = n_cols + n_slack;
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m_std, n_struct);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(m_std);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_struct);

  for (int j = 0; j < n; ++j) {
    const VarMap& vm = sf.vars[j];
    if (vm.fixed) continue;
    c(vm.col) += p.objective(j) * vm.scale;
    if (vm.neg_col >= 0) c(vm.neg_col) -= p.objective(j);
  }

  int slack_at = n_cols;
  for (int i = 0; i < m; ++i) {
    double b = p.rhs(i);
    for (int j = 0; j < n; ++j) {
      const double a = p.rows(i, j);
      if (a == 0.0) continue;
      const VarMap& vm = sf.vars[j];
      b -= a * vm.offset;
      if (vm.fixed) continue;
      E(i, vm.col) += a * vm.scale;
      if (vm.neg_col >= 0) E(i, vm.neg_col) -= a;
    }
    f(i) = b;
    if (p.senses[i] == Sense::GE) E(i, slack_at++) = -1.0;
    else if (p.senses[i] == Sense::LE) E(i, slack_at++) = 1.0;
  }
  for (int k = 0; k < n_bound_rows; ++k) {
    const int r = m + k;
    E(r, bounded_cols[k]) = 1.0;
    E(r, slack_at++) = 1.0;
    f(r) = bounded_range[k];
  }

  // Row equilibration; trivial rows are dropped (or expose infeasibility).
  sf.orig_row_of.assign(m_std, -1);
  for (int i = 0; i < m; ++i) sf.orig_row_of[i] = i;
  sf.dual_scale.assign(m_std, 1.0);

  std::vector<int> keep;
  for (int i = 0; i < m_std; ++i) {
    const double mx = E.row(i).cwiseAbs().maxCoeff();
    if (mx <= 0.0) {
      if (std::abs(f(i)) > 1e-10) {
        sf.infeasible = true;
        return sf;
      }
      continue;
    }
    E.row(i) /= mx;
    f(i) /= mx;
    double flip = 1.0;
    if (f(i) < 0.0) {
      E.row(i) *= -1.0;
      f(i) *= -1.0;
      flip = -1.0;
    }
    sf.dual_scale[i] = flip / mx;
    keep.push_back(i);
  }
  sf.E.resize(static_cast<int>(keep.size()), n_struct);
  sf.f.resize(static_cast<int>(keep.size()));
  std::vector<int> orig_kept;
  std::vector<double> scale_kept;
  for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
    sf.E.row(k) = E.row(keep[k]);
    sf.f(k) = f(keep[k]);
    orig_kept.push_back(sf.orig_row_of[keep[k]]);
    scale_kept.push_back(sf.dual_scale[keep[k]]);
  }
  sf.orig_row_of = std::move(orig_kept);
  sf.dual_scale = std::move(scale_kept);
  sf.c = std::move(c);
  return sf;
}

}  // namespace

Solution solve(const Problem& p, const Options& opts) {
  if (p.rows.rows() != p.rhs.size() ||
      static_cast<Eigen::Index>(p.senses.size()) != p.rhs.size() ||
      p.rows.cols() != p.objective.size())
    throw DimensionMismatch("inconsistent LP dimensions");
  if (!p.objective.allFinite() || !p.rows.allFinite() || !p.rhs.allFinite())
    throw InvalidInput("non-finite LP coefficients");

  Solution out;
  out.x = Eigen::VectorXd::Zero(p.num_vars());
  out.row_duals = Eigen::VectorXd::Zero(p.num_rows());

  StdForm sf = build_standard_form(p);
  if (sf.infeasible) {
    out.status = Status::INFEASIBLE;
    return out;
  }

  const int m = static_cast<int>(sf.E.rows());
  const int ns = static_cast<int>(sf.E.cols());
  const int nt = ns + m;  // + artificials

  // Tableau rows [E | I | f]; cost rows carry reduced costs and -objective.
  Eigen::MatrixXd T(m, nt + 1);
  T.leftCols(ns) = sf.E;
  T.middleCols(ns, m) = Eigen::MatrixXd::Identity(m, m);
  T.col(nt) = sf.f;

  Eigen::RowVectorXd cost1 = Eigen::RowVectorXd::Zero(nt + 1);  // phase 1
  Eigen::RowVectorXd cost2 = Eigen::RowVectorXd::Zero(nt + 1);  // phase 2
  cost2.head(ns) = sf.c.transpose();
  for (int i = 0; i < m; ++i) cost1 -= T.row(i);  // artificial basis reduced costs
  cost1.segment(ns, m).setZero();

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = ns + i;

  auto pivot = [&](int r, int j) {
    T.row(r) /= T(r, j);
    for (int i = 0; i < m; ++i) {
      if (i == r || T(i, j) == 0.0) continue;
      T.row(i) -= T(i, j) * T.row(r);
    }
    if (cost1(j) != 0.0) cost1 -= cost1(j) * T.row(r);
    if (cost2(j) != 0.0) cost2 -= cost2(j) * T.row(r);
    basis[r] = j;
  };

  // Bland's rule: smallest eligible entering index, smallest basic index on ties.
  auto iterate = [&](const Eigen::RowVectorXd& costs, bool& hit_limit) -> bool {
    while (true) {
      int enter = -1;
      for (int j = 0; j < ns; ++j) {
        if (costs(j) < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      if (out.iterations >= opts.max_iters) {
        hit_limit = true;
        return true;
      }
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        const double piv = T(i, enter);
        if (piv <= kPivotEps) continue;
        const double ratio = T(i, nt) / piv;
        if (leave < 0) {
          best = ratio;
          leave = i;
          continue;
        }
        const double tie = 1e-12 * (1.0 + std::abs(best));
        if (ratio < best - tie) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + tie && basis[i] < basis[leave]) {
          leave = i;
        }
      }
      if (leave < 0) return false;  // unbounded direction
      pivot(leave, enter);
      ++out.iterations;
    }
  };

  bool hit_limit = false;
  iterate(cost1, hit_limit);
  if (hit_limit) {
    out.status = Status::ITERATION_LIMIT;
    return out;
  }
  const double phase1_obj = -cost1(nt);
  if (phase1_obj > opts.feas_tol * (1.0 + sf.f.lpNorm<1>())) {
    out.status = Status::INFEASIBLE;
    return out;
  }

  // Drive leftover artificials out; all-zero rows are redundant and inert.
  for (int i = 0; i < m; ++i) {
    if (basis[i] < ns) continue;
    for (int j = 0; j < ns; ++j) {
      if (std::abs(T(i, j)) > 1e-7) {
        pivot(i, j);
        break;
      }
    }
  }

  const bool bounded = iterate(cost2, hit_limit);
  if (hit_limit) {
    out.status = Status::ITERATION_LIMIT;
    return out;
  }
  if (!bounded) {
    out.status = Status::UNBOUNDED;
    return out;
  }

  Eigen::VectorXd z = Eigen::VectorXd::Zero(nt);
  for (int i = 0; i < m; ++i) z(basis[i]) = T(i, nt);
  for (int j = 0; j < p.num_vars(); ++j) {
    const VarMap& vm = sf.vars[j];
    double v = vm.offset;
    if (vm.col >= 0) v += vm.scale * z(vm.col);
    if (vm.neg_col >= 0) v -= z(vm.neg_col);
    out.x(j) = v;
  }
  out.objective_value = p.objective.dot(out.x);
  out.status = Status::OPTIMAL;

  // Certificate: y = B^-T c_B on the pre-pivot system, mapped to original rows.
  Eigen::MatrixXd B(m, m);
  Eigen::VectorXd cb(m);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < ns) {
      B.col(i) = sf.E.col(basis[i]);
      cb(i) = sf.c(basis[i]);
    } else {
      B.col(i) = Eigen::VectorXd::Unit(m, basis[i] - ns);
      cb(i) = 0.0;
    }
  }
  Eigen::VectorXd y = B.transpose().completeOrthogonalDecomposition().solve(cb);
  const double primal_std = sf.c.dot(z.head(ns));
  out.duality_gap = std::abs(primal_std - sf.f.dot(y));
  out.min_reduced_cost = (sf.c - sf.E.transpose() * y).minCoeff();
  for (int k = 0; k < m; ++k) {
    const int orig = sf.orig_row_of[k];
    if (orig >= 0) out.row_duals(orig) = y(k) * sf.dual_scale[k];
  }
  return out;
}

namespace {

struct ActiveSetWorkspace {
  Eigen::MatrixXd eq_rows;   // always-active equalities
  Eigen::VectorXd eq_rhs;
  Eigen::MatrixXd in_rows;   // inequalities g'x >= h
  Eigen::VectorXd in_rhs;
  Eigen::VectorXd in_scale;  // per-inequality feasibility scale
};

// Least-squares projection of x_hat onto {x : eq_rows x = eq_rhs, active ineqs tight}.
// Returns the point and min-norm multipliers for the active inequality block.
std::pair<Eigen::VectorXd, Eigen::VectorXd> constrained_projection(
    const ActiveSetWorkspace& ws, const std::vector<int>& active,
    const Eigen::VectorXd& x_hat, double* eq_residual) {
  const int ne = static_cast<int>(ws.eq_rows.rows());
  const int na = static_cast<int>(active.size());
  Eigen::MatrixXd M(ne + na, x_hat.size());
  Eigen::VectorXd q(ne + na);
  M.topRows(ne) = ws.eq_rows;
  q.head(ne) = ws.eq_rhs;
  for (int k = 0; k < na; ++k) {
    M.row(ne + k) = ws.in_rows.row(active[k]);
    q(ne + k) = ws.in_rhs(active[k]);
  }
  auto cod = M.completeOrthogonalDecomposition();
  const Eigen::VectorXd d = cod.solve(q - M * x_hat);
  const Eigen::VectorXd x = x_hat + d;
  if (eq_residual) *eq_residual = (M * x - q).cwiseAbs().maxCoeff();
  Eigen::VectorXd lambda =
      M.transpose().completeOrthogonalDecomposition().solve(d);
  Eigen::VectorXd lambda_in(na);
  for (int k = 0; k < na; ++k) lambda_in(k) = lambda(ne + k);
  return {x, lambda_in};
}

Eigen::VectorXd face_feasible_start(const ActiveSetWorkspace& ws) {
  const int n = static_cast<int>(ws.eq_rows.cols());
  Problem p = Problem::make(n);
  for (int i = 0; i < ws.eq_rows.rows(); ++i)
    p.add_row(ws.eq_rows.row(i).transpose(), Sense::EQ, ws.eq_rhs(i));
  for (int i = 0; i < ws.in_rows.rows(); ++i)
    p.add_row(ws.in_rows.row(i).transpose(), Sense::GE, ws.in_rhs(i));
  Solution s = solve(p);
  if (!s.optimal()) throw EmptyFace("face has no feasible point");
  return s.x;
}

}  // namespace

Eigen::VectorXd solve_qp_projection(const Eigen::MatrixXd& rows, const Eigen::VectorXd& rhs,
                                    int eq_row, const Eigen::VectorXd& x_hat,
                                    const ExtraConstraints* extra) {
  const int m = static_cast<int>(rows.rows());
  const int n = static_cast<int>(rows.cols());
  if (rhs.size() != m || x_hat.size() != n) throw DimensionMismatch("projection inputs disagree");
  if (eq_row < 0 || eq_row >= m) throw InvalidInput("eq_row out of range");

  ActiveSetWorkspace ws;
  const int n_extra_eq = extra ? static_cast<int>(extra->eq_rows.rows()) : 0;
  const int n_extra_in = extra ? static_cast<int>(extra->ineq_rows.rows()) : 0;
  ws.eq_rows.resize(1 + n_extra_eq, n);
  ws.eq_rhs.resize(1 + n_extra_eq);
  ws.eq_rows.row(0) = rows.row(eq_row);
  ws.eq_rhs(0) = rhs(eq_row);
  if (n_extra_eq > 0) {
    ws.eq_rows.bottomRows(n_extra_eq) = extra->eq_rows;
    ws.eq_rhs.tail(n_extra_eq) = extra->eq_rhs;
  }
  ws.in_rows.resize(m - 1 + n_extra_in, n);
  ws.in_rhs.resize(m - 1 + n_extra_in);
  int at = 0;
  for (int i = 0; i < m; ++i) {
    if (i == eq_row) continue;
    ws.in_rows.row(at) = rows.row(i);
    ws.in_rhs(at) = rhs(i);
    ++at;
  }
  if (n_extra_in > 0) {
    ws.in_rows.bottomRows(n_extra_in) = extra->ineq_rows;
    ws.in_rhs.tail(n_extra_in) = extra->ineq_rhs;
  }
  const int mi = static_cast<int>(ws.in_rows.rows());
  ws.in_scale.resize(mi);
  for (int i = 0; i < mi; ++i)
    ws.in_scale(i) = std::max({1.0, std::abs(ws.in_rhs(i)),
                               ws.in_rows.row(i).cwiseAbs().maxCoeff() * x_hat.cwiseAbs().maxCoeff()});

  auto violation = [&](const Eigen::VectorXd& x, const std::vector<int>& skip) {
    int worst = -1;
    for (int i = 0; i < mi; ++i) {
      if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
      const double v = ws.in_rows.row(i).dot(x) - ws.in_rhs(i);
      if (v < -1e-8 * ws.in_scale(i) && worst < 0) worst = i;
    }
    return worst;
  };

  std::vector<int> active;
  double eq_res = 0.0;
  auto [x_try, lam0] = constrained_projection(ws, active, x_hat, &eq_res);
  const double eq_scale =
      std::max(1.0, ws.eq_rhs.cwiseAbs().maxCoeff() + ws.eq_rows.cwiseAbs().maxCoeff());
  if (eq_res > 1e-7 * eq_scale) throw EmptyFace("face equalities are inconsistent");

  Eigen::VectorXd x_cur;
  if (violation(x_try, active) < 0) return x_try;  // hyperplane projection already feasible
  x_cur = face_feasible_start(ws);

  const int max_iters = 200 + 20 * (mi + n);
  for (int iter = 0; iter < max_iters; ++iter) {
    auto [x_t, lambda] = constrained_projection(ws, active, x_hat, nullptr);
    const Eigen::VectorXd d = x_t - x_cur;
    const bool stalled = d.cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + x_cur.cwiseAbs().maxCoeff());
    if (stalled || violation(x_t, active) < 0) {
      if (!stalled) x_cur = x_t;
      int drop = -1;
      for (int k = 0; k < static_cast<int>(active.size()); ++k) {
        if (lambda(k) < -1e-9) {
          drop = k;
          break;
        }
      }
      if (drop < 0) return x_cur;
      active.erase(active.begin() + drop);
      continue;
    }
    // Step toward x_t until the first inactive row blocks.
    double alpha = 1.0;
    int blocker = -1;
    for (int i = 0; i < mi; ++i) {
      if (std::find(active.begin(), active.end(), i) != active.end()) continue;
      const double gd = ws.in_rows.row(i).dot(d);
      if (gd >= -1e-12 * ws.in_scale(i)) continue;
      const double gap = ws.in_rows.row(i).dot(x_cur) - ws.in_rhs(i);
      const double a = std::max(0.0, gap / (-gd));
      if (a < alpha - 1e-12) {
        alpha = a;
        blocker = i;
      }
    }
    x_cur += alpha * d;
    if (blocker < 0) {
      x_cur = x_t;
      continue;
    }
    active.push_back(blocker);
  }
  throw Error("face projection did not converge");
}

}  // namespace gio::lp
