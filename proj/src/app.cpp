#include "gio/app.hpp"

#include <cmath>
#include <random>

namespace gio::app {

namespace {

constexpr int kRegular = 0, kOvertime = 1, kIdle = 2, kInventory = 3, kBackorder = 4;

int var_index(int quarter, int j) { return quarter * 5 + j; }

// Balance rhs for quarter h; the h = 0 row absorbs the carried-over stocks.
double balance_rhs(const AppInstance& inst, int h) {
  double b = inst.demand(h);
  if (h == 0) b += -inst.init_inventory + inst.init_backorder;
  return b;
}

Eigen::VectorXd balance_row(int h) {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
  row(var_index(h, kRegular)) = 1.0;
  row(var_index(h, kOvertime)) = 1.0;
  row(var_index(h, kInventory)) = -1.0;
  row(var_index(h, kBackorder)) = 1.0;
  if (h > 0) {
    row(var_index(h - 1, kInventory)) = 1.0;
    row(var_index(h - 1, kBackorder)) = -1.0;
  }
  return row;
}

void validate_instance(const AppInstance& inst) {
  if (inst.demand.minCoeff() < 0.0) throw InvalidInput("demand must be nonnegative");
  if (inst.a1 <= 0.0 || inst.a2 <= 0.0) throw InvalidInput("capacities must be positive");
  if (inst.init_inventory < 0.0 || inst.init_backorder < 0.0)
    throw InvalidInput("initial stocks must be nonnegative");
}

}  // namespace

lp::Problem build_app_forward(const AppInstance& inst) {
  validate_instance(inst);
  lp::Problem p = lp::Problem::make(20);
  p.lower.setZero();
  for (int h = 0; h < 4; ++h)
    p.add_row(balance_row(h), lp::Sense::EQ, balance_rhs(inst, h));
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
    row(var_index(h, kRegular)) = 1.0;
    row(var_index(h, kIdle)) = 1.0;
    p.add_row(row, lp::Sense::EQ, inst.a1);
  }
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
    row(var_index(h, kOvertime)) = 1.0;
    p.add_row(row, lp::Sense::LE, inst.a2);
  }
  return p;
}

lp::Problem build_app_forward(const AppInstance& inst, const AppCost& cost) {
  lp::Problem p = build_app_forward(inst);
  for (int h = 0; h < 4; ++h)
    for (int j = 0; j < 5; ++j) p.objective(var_index(h, j)) = cost.c(j);
  return p;
}

Polyhedron app_polyhedron(const AppInstance& inst) {
  validate_instance(inst);
  std::vector<RawConstraint> rows;
  for (int h = 0; h < 4; ++h)
    rows.push_back({balance_row(h), ConstraintSense::EQ, balance_rhs(inst, h), false});
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
    row(var_index(h, kRegular)) = 1.0;
    row(var_index(h, kIdle)) = 1.0;
    rows.push_back({row, ConstraintSense::EQ, inst.a1, false});
  }
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
    row(var_index(h, kOvertime)) = 1.0;
    rows.push_back({row, ConstraintSense::LE, inst.a2, false});
  }
  for (int k = 0; k < 20; ++k) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(20);
    row(k) = 1.0;
    rows.push_back({row, ConstraintSense::GE, 0.0, true});
  }
  return canonicalize(rows);
}

Eigen::VectorXd flatten(const AppPlan& plan) {
  Eigen::VectorXd x(20);
  for (int h = 0; h < 4; ++h)
    for (int j = 0; j < 5; ++j) x(var_index(h, j)) = plan.x(h, j);
  return x;
}

AppPlan plan_from_vector(const Eigen::VectorXd& x) {
  if (x.size() != 20) throw DimensionMismatch("APP plan vector must have 20 entries");
  AppPlan plan;
  for (int h = 0; h < 4; ++h)
    for (int j = 0; j < 5; ++j) plan.x(h, j) = x(var_index(h, j));
  return plan;
}

bool plan_feasible(const AppInstance& inst, const AppPlan& plan, double tol) {
  if (plan.x.minCoeff() < -tol) return false;
  for (int h = 0; h < 4; ++h) {
    if (std::abs(balance_row(h).dot(flatten(plan)) - balance_rhs(inst, h)) > tol) return false;
    if (std::abs(plan.x(h, kRegular) + plan.x(h, kIdle) - inst.a1) > tol) return false;
    if (plan.x(h, kOvertime) > inst.a2 + tol) return false;
  }
  return true;
}

AppPlan solve_app_forward(const AppInstance& inst, const AppCost& cost) {
  lp::Solution s = lp::solve(build_app_forward(inst, cost));
  if (!s.optimal()) throw Error("forward APP model did not solve to optimality");
  return plan_from_vector(s.x);
}

namespace {

// Inverse model variable layout: c(5), eps_a, gamma(4), lambda(4), mu(4).
struct InverseLayout {
  static constexpr int c(int j) { return j; }
  static constexpr int eps = 5;
  static constexpr int gamma(int h) { return 6 + h; }
  static constexpr int lambda(int h) { return 10 + h; }
  static constexpr int mu(int h) { return 14 + h; }
  static constexpr int total = 18;
};

lp::Problem build_inverse_lp(const AppInstance& inst, const AppPlan& plan,
                             const CostConstraintSet& cc) {
  using L = InverseLayout;
  lp::Problem p = lp::Problem::make(L::total);
  for (int j = 0; j < 5; ++j) p.lower(L::c(j)) = kCostFloor;
  for (const auto& [j, v] : cc.lower_bounds) p.lower(L::c(j)) = std::max(kCostFloor, v);
  for (int j : cc.zero_pattern) {
    p.lower(L::c(j)) = 0.0;
    p.upper(L::c(j)) = 0.0;
  }
  for (int h = 0; h < 4; ++h) p.lower(L::mu(h)) = 0.0;
  p.objective(L::eps) = 1.0;

  auto row0 = [&] { return Eigen::VectorXd::Zero(L::total).eval(); };
  // Dual feasibility for inventory: -gamma_h + gamma_{h+1} <= c4 (gamma_5 = 0).
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd r = row0();
    r(L::gamma(h)) = -1.0;
    if (h < 3) r(L::gamma(h + 1)) = 1.0;
    r(L::c(kInventory)) = -1.0;
    p.add_row(r, lp::Sense::LE, 0.0);
  }
  // Backorder: gamma_h - gamma_{h+1} <= c5.
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd r = row0();
    r(L::gamma(h)) = 1.0;
    if (h < 3) r(L::gamma(h + 1)) = -1.0;
    r(L::c(kBackorder)) = -1.0;
    p.add_row(r, lp::Sense::LE, 0.0);
  }
  // Regular time: gamma_h + lambda_h <= c1.
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd r = row0();
    r(L::gamma(h)) = 1.0;
    r(L::lambda(h)) = 1.0;
    r(L::c(kRegular)) = -1.0;
    p.add_row(r, lp::Sense::LE, 0.0);
  }
  // Overtime: gamma_h - mu_h <= c2.
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd r = row0();
    r(L::gamma(h)) = 1.0;
    r(L::mu(h)) = -1.0;
    r(L::c(kOvertime)) = -1.0;
    p.add_row(r, lp::Sense::LE, 0.0);
  }
  // Idle: lambda_h <= c3.
  for (int h = 0; h < 4; ++h) {
    Eigen::VectorXd r = row0();
    r(L::lambda(h)) = 1.0;
    r(L::c(kIdle)) = -1.0;
    p.add_row(r, lp::Sense::LE, 0.0);
  }
  // Relaxed strong duality: c'x_hat = b'y + eps_a.
  {
    Eigen::VectorXd r = row0();
    for (int h = 0; h < 4; ++h)
      for (int j = 0; j < 5; ++j) r(L::c(j)) += plan.x(h, j);
    for (int h = 0; h < 4; ++h) {
      r(L::gamma(h)) = -balance_rhs(inst, h);
      r(L::lambda(h)) = -inst.a1;
      r(L::mu(h)) = inst.a2;
    }
    r(L::eps) = -1.0;
    p.add_row(r, lp::Sense::EQ, 0.0);
  }
  // Simplex normalization.
  {
    Eigen::VectorXd r = row0();
    for (int j = 0; j < 5; ++j) r(L::c(j)) = 1.0;
    p.add_row(r, lp::Sense::EQ, 1.0);
  }
  // Structural rows on c.
  for (int i = 0; i < cc.eq_rows.rows(); ++i) {
    Eigen::VectorXd r = row0();
    r.head(5) = cc.eq_rows.row(i).transpose();
    p.add_row(r, lp::Sense::EQ, cc.eq_rhs(i));
  }
  for (int i = 0; i < cc.ineq_rows.rows(); ++i) {
    Eigen::VectorXd r = row0();
    r.head(5) = cc.ineq_rows.row(i).transpose();
    p.add_row(r, lp::Sense::GE, cc.ineq_rhs(i));
  }
  return p;
}

}  // namespace

AppInverseResult solve_inverse_app(const AppInstance& inst, const AppPlan& plan,
                                   const CostConstraintSet& cc) {
  using L = InverseLayout;
  if (cc.cone_rows) throw InvalidInput("cone-of-rows constraints are not part of the APP model");
  if ((cc.eq_rows.rows() > 0 && cc.eq_rows.cols() != 5) ||
      (cc.ineq_rows.rows() > 0 && cc.ineq_rows.cols() != 5))
    throw DimensionMismatch("APP cost constraints must have 5 columns");
  for (const auto& [j, v] : cc.lower_bounds) {
    (void)v;
    if (j < 0 || j >= 5) throw DimensionMismatch("APP lower_bounds index out of range");
  }
  for (int j : cc.zero_pattern)
    if (j < 0 || j >= 5) throw DimensionMismatch("APP zero_pattern index out of range");
  lp::Solution s = lp::solve(build_inverse_lp(inst, plan, cc));
  if (!s.optimal()) throw ConstraintInfeasible("inverse APP model infeasible under the given set");

  // The gap-optimal face can hold many cost vectors; pick the one with the
  // lowest imputed total cost c'x_hat (the weighted l1-regularized choice),
  // which also makes the result basis-independent.
  lp::Problem refine = build_inverse_lp(inst, plan, cc);
  refine.objective.setZero();
  for (int h = 0; h < 4; ++h)
    for (int j = 0; j < 5; ++j) refine.objective(L::c(j)) += plan.x(h, j);
  refine.upper(L::eps) = s.x(L::eps) + 1e-9 * (1.0 + std::abs(s.x(L::eps)));
  lp::Solution s2 = lp::solve(refine);
  if (s2.optimal()) s = s2;

  AppInverseResult out;
  for (int j = 0; j < 5; ++j) out.cost.c(j) = s.x(L::c(j));
  out.eps_a = s.x(L::eps);
  for (int h = 0; h < 4; ++h) {
    out.gamma(h) = s.x(L::gamma(h));
    out.lambda(h) = s.x(L::lambda(h));
    out.mu(h) = s.x(L::mu(h));
  }
  return out;
}

FitReport rho_a_app(const AppInstance& inst, const AppPlan& plan, const CostConstraintSet& cc) {
  using L = InverseLayout;
  const AppInverseResult fit = solve_inverse_app(inst, plan, cc);

  const Polyhedron poly = app_polyhedron(inst);
  const Eigen::VectorXd x_hat = flatten(plan);
  const Eigen::VectorXd s = slack(poly, x_hat);

  FitReport report;
  report.variant = {NormVariant::ABS_GAP};
  report.loss_star = fit.eps_a;
  report.per_row.resize(poly.num_rows());

  const CostConstraintSet floors_only;  // baseline: c_j >= 0.0001 built into the LP
  std::vector<double> included;
  for (int i = 0; i < poly.num_rows(); ++i) {
    PerRowFit& row = report.per_row[i];
    row.row = i;
    const double eps_i = s(i) / poly.row(i).cwiseAbs().sum();
    row.eps_tilde_norm = eps_i;
    row.eps_norm = eps_i;

    lp::Problem screen = build_inverse_lp(inst, plan, floors_only);
    screen.objective.setZero();
    screen.lower(L::eps) = eps_i;
    screen.upper(L::eps) = eps_i;
    row.included_in_denominator = lp::solve(screen).optimal();
    if (row.included_in_denominator) included.push_back(eps_i);
  }
  if (included.empty()) throw EmptyDenominator("every APP row failed the feasibility screen");

  double sum = 0.0;
  for (double v : included) sum += v;
  report.denominator = sum / static_cast<double>(included.size());
  report.denominator_tilde = report.denominator;
  report.rho = report.denominator <= 0.0 ? 1.0 : 1.0 - report.loss_star / report.denominator;
  report.rho_tilde = report.rho;
  report.negative_rho_warning = report.rho < 0.0;
  return report;
}

AppPlan perturb_plan(const AppPlan& optimal_plan, const AppInstance& inst, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    // raw engine bits; std::uniform_real_distribution is implementation-defined
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
  };

  AppPlan out = optimal_plan;
  for (int h = 0; h < 4; ++h) {
    const double reg = optimal_plan.x(h, kRegular);
    double perturbed;
    if (reg == 0.0) {
      perturbed = uniform(0.0, 0.02) * optimal_plan.x(h, kIdle);
    } else {
      perturbed = reg + uniform(-0.03, 0.03) * reg;
    }
    perturbed = std::min(std::max(perturbed, 0.0), inst.a1);
    out.x(h, kRegular) = perturbed;
    out.x(h, kIdle) = inst.a1 - perturbed;  // restore capacity equality
  }
  double prev_inv = inst.init_inventory;
  double prev_back = inst.init_backorder;
  for (int h = 0; h < 4; ++h) {
    const double net = prev_inv - prev_back + out.x(h, kRegular) + out.x(h, kOvertime) -
                       inst.demand(h);
    out.x(h, kInventory) = std::max(net, 0.0);
    out.x(h, kBackorder) = std::max(-net, 0.0);
    prev_inv = out.x(h, kInventory);
    prev_back = out.x(h, kBackorder);
  }
  return out;
}

AppCost rescale_costs(const AppCost& cost, int anchor_index, double anchor_value) {
  if (anchor_index < 0 || anchor_index >= 5) throw DimensionMismatch("anchor index out of range");
  if (cost.c(anchor_index) <= 0.0) throw ZeroAnchor("anchor component must be positive");
  AppCost out;
  out.c = cost.c * (anchor_value / cost.c(anchor_index));
  return out;
}

}  // namespace gio::app
