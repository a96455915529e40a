#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gio/constrained.hpp"
#include "gio/geometry.hpp"
#include "gio/gof.hpp"
#include "gio/lp.hpp"

namespace gio::app {

/// Aggregate production planning instance: quarterly demand (labour-hours),
/// regular-time and overtime capacity, and carried-over stocks.
struct AppInstance {
  Eigen::Vector4d demand = Eigen::Vector4d::Zero();
  double a1 = 35000.0;  // regular-time hours per quarter
  double a2 = 3500.0;   // overtime hours per quarter
  double init_inventory = 0.0;
  double init_backorder = 0.0;
};

/// Quarterly plan; columns: regular, overtime, idle, inventory, backorder.
struct AppPlan {
  Eigen::Matrix<double, 4, 5> x = Eigen::Matrix<double, 4, 5>::Zero();
};

struct AppCost {
  Eigen::Matrix<double, 5, 1> c = Eigen::Matrix<double, 5, 1>::Zero();
};

inline constexpr double kCostFloor = 1e-4;  // c_j >= 0.0001 in all inverse solves

/// The forward LP: 20 nonnegative variables x_{h,j}, inventory-balance and
/// capacity equalities, overtime caps. Objective repeats cost per quarter.
lp::Problem build_app_forward(const AppInstance& inst);
lp::Problem build_app_forward(const AppInstance& inst, const AppCost& cost);

/// The forward feasible set in canonical Ax >= b form (equalities split,
/// variable bounds tagged NONNEG).
Polyhedron app_polyhedron(const AppInstance& inst);

Eigen::VectorXd flatten(const AppPlan& plan);
AppPlan plan_from_vector(const Eigen::VectorXd& x);

bool plan_feasible(const AppInstance& inst, const AppPlan& plan, double tol = 1e-6);

/// Solves the forward LP; throws on infeasible/unbounded instances.
AppPlan solve_app_forward(const AppInstance& inst, const AppCost& cost);

struct AppInverseResult {
  AppCost cost;       // on the unit simplex
  double eps_a = 0.0;
  Eigen::Vector4d gamma = Eigen::Vector4d::Zero();   // balance duals
  Eigen::Vector4d lambda = Eigen::Vector4d::Zero();  // capacity duals
  Eigen::Vector4d mu = Eigen::Vector4d::Zero();      // overtime duals
};

/// Inverse APP model: minimal absolute duality gap over dual-feasible
/// (gamma, lambda, mu) and simplex-normalized costs with c_j >= 0.0001,
/// plus the caller's structural rows on c.
AppInverseResult solve_inverse_app(const AppInstance& inst, const AppPlan& plan,
                                   const CostConstraintSet& cc);

/// rho_a for the observed plan. The numerator solves under cc; the
/// denominator averages the per-row gaps that remain feasible under the
/// cost floors alone, so competing models share one baseline.
FitReport rho_a_app(const AppInstance& inst, const AppPlan& plan, const CostConstraintSet& cc);

/// Noisy observation generator: regular time shifted per quarter, idle
/// restored to capacity, stocks rebalanced to meet demand. Deterministic
/// for a fixed seed.
AppPlan perturb_plan(const AppPlan& optimal_plan, const AppInstance& inst, std::uint64_t seed);

/// Rescale so that c[anchor_index] == anchor_value.
AppCost rescale_costs(const AppCost& cost, int anchor_index, double anchor_value);

}  // namespace gio::app
