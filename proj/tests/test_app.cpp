#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gio/app.hpp"
#include "gio/json_io.hpp"

using namespace gio;
using namespace gio::app;

namespace {

const char* kTable4 = GIO_DATA_DIR "/app_table4.json";
const char* kModels = GIO_DATA_DIR "/app_models.json";

AppData data() { return load_app_data(kTable4); }

CostConstraintSet model_cc(int index) {
  const auto models = load_app_models(kModels);
  return models.at(index).constraints;
}

}  // namespace

TEST_CASE("forward model reproduces the unperturbed optimum") {
  const AppData d = data();
  const AppPlan plan = solve_app_forward(d.clean_instance, d.true_cost);
  CHECK((plan.x - d.unperturbed.x).cwiseAbs().maxCoeff() < 1e-6);
  CHECK(plan_feasible(d.clean_instance, plan, 1e-6));
}

TEST_CASE("observed Table-4 plan is feasible at print precision") {
  const AppData d = data();
  CHECK(plan_feasible(d.instance, d.observed, 0.5));
  // the printed values carry ~0.1 hour rounding in the balance rows
  CHECK_FALSE(plan_feasible(d.instance, d.observed, 1e-6));
  CHECK(classify(app_polyhedron(d.instance), flatten(d.observed), 0.5) !=
        PointClass::INFEASIBLE);
}

TEST_CASE("zero demand: no production, idle at capacity") {
  AppInstance inst;
  inst.demand.setZero();
  AppCost cost;
  cost.c << 14, 21, 8, 4, 17;
  const AppPlan plan = solve_app_forward(inst, cost);
  CHECK(plan.x.col(0).cwiseAbs().maxCoeff() < 1e-9);  // regular
  CHECK(plan.x.col(1).cwiseAbs().maxCoeff() < 1e-9);  // overtime
  for (int h = 0; h < 4; ++h) CHECK(plan.x(h, 2) == doctest::Approx(inst.a1));
}

TEST_CASE("unconstrained inverse matches the published unscaled estimate") {
  const AppData d = data();
  const AppInverseResult r = solve_inverse_app(d.instance, d.observed, model_cc(3));
  CHECK(r.cost.c(0) == doctest::Approx(0.0002).epsilon(0.02));
  CHECK(r.cost.c(1) == doctest::Approx(0.0001).epsilon(1e-6));
  CHECK(r.cost.c(2) == doctest::Approx(0.0001).epsilon(1e-6));
  CHECK(r.cost.c(3) == doctest::Approx(0.9995).epsilon(1e-4));
  CHECK(r.cost.c(4) == doctest::Approx(0.0001).epsilon(1e-6));
  CHECK(r.eps_a == doctest::Approx(0.5282).epsilon(1e-2));
  CHECK(r.cost.c.sum() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constrained inverse reproduces the published scaled estimates") {
  const AppData d = data();
  struct Expect {
    int model;
    double scaled[5];
    double rho;
  };
  const Expect expected[] = {
      {0, {6, 21, 24, 2, 25}, 0.426},
      {1, {6, 21, 0.0035, 2, 6}, 0.846},
      {2, {12, 21, 1.5, 4, 10.5}, 0.906},
  };
  for (const Expect& e : expected) {
    const AppInverseResult r = solve_inverse_app(d.instance, d.observed, model_cc(e.model));
    const AppCost scaled = rescale_costs(r.cost, 1, 21.0);
    for (int j = 0; j < 5; ++j)
      CHECK(scaled.c(j) == doctest::Approx(e.scaled[j]).epsilon(0.01));
    const FitReport fit = rho_a_app(d.instance, d.observed, model_cc(e.model));
    CHECK(fit.rho == doctest::Approx(e.rho).epsilon(0.02));
    CHECK(fit.rho_tilde == fit.rho);
  }
}

TEST_CASE("rho_a ordering is strictly increasing across the model ladder") {
  const AppData d = data();
  double prev = -1.0;
  for (int m = 0; m < 4; ++m) {
    const FitReport fit = rho_a_app(d.instance, d.observed, model_cc(m));
    CHECK(fit.rho > prev);
    prev = fit.rho;
  }
  CHECK(prev > 0.999);  // Model 4 is near-perfect
}

TEST_CASE("denominator screen keeps the nonzero-gap rows") {
  const AppData d = data();
  const FitReport fit = rho_a_app(d.instance, d.observed, model_cc(3));
  int kept = 0;
  for (const auto& row : fit.per_row) kept += row.included_in_denominator ? 1 : 0;
  CHECK(kept == 16);
  CHECK(fit.denominator == doctest::Approx(12082.97).epsilon(1e-3));
}

TEST_CASE("round trip: inverse on the exact optimum is a perfect fit") {
  const AppData d = data();
  CostConstraintSet none;
  const AppInverseResult r = solve_inverse_app(d.clean_instance, d.unperturbed, none);
  CHECK(r.eps_a <= 1e-6);
  const FitReport fit = rho_a_app(d.clean_instance, d.unperturbed, none);
  CHECK(fit.rho == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("perturbation: deterministic, capacity-restoring, feasible") {
  const AppData d = data();
  const AppPlan optimum = solve_app_forward(d.clean_instance, d.true_cost);
  const AppPlan a = perturb_plan(optimum, d.clean_instance, 12345);
  const AppPlan b = perturb_plan(optimum, d.clean_instance, 12345);
  CHECK((a.x - b.x).cwiseAbs().maxCoeff() == 0.0);
  const AppPlan c = perturb_plan(optimum, d.clean_instance, 54321);
  CHECK((a.x - c.x).cwiseAbs().maxCoeff() > 0.0);

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const AppPlan p = perturb_plan(optimum, d.clean_instance, seed);
    CHECK(plan_feasible(d.clean_instance, p, 1e-6));
    for (int h = 0; h < 4; ++h)
      CHECK(p.x(h, 0) + p.x(h, 2) == doctest::Approx(d.clean_instance.a1).epsilon(1e-12));
  }
}

TEST_CASE("perturbation branch for zero regular time") {
  AppInstance inst;
  inst.demand.setZero();
  AppCost cost;
  cost.c << 14, 21, 8, 4, 17;
  const AppPlan optimum = solve_app_forward(inst, cost);  // all idle
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const AppPlan p = perturb_plan(optimum, inst, seed);
    for (int h = 0; h < 4; ++h) {
      CHECK(p.x(h, 0) >= 0.0);
      CHECK(p.x(h, 0) <= 0.02 * inst.a1 + 1e-9);
    }
    CHECK(plan_feasible(inst, p, 1e-6));
  }
}

TEST_CASE("rescaling costs") {
  AppCost c;
  c.c << 0.171, 0.6, 0.0001, 0.057, 0.171;
  const AppCost scaled = rescale_costs(c, 1, 21.0);
  CHECK(scaled.c(1) == doctest::Approx(21.0));
  CHECK(scaled.c(0) == doctest::Approx(0.171 * 35.0));
  CHECK(scaled.c(2) == doctest::Approx(0.0035));
  // anchoring to the current value is the identity
  const AppCost same = rescale_costs(c, 0, 0.171);
  CHECK((same.c - c.c).cwiseAbs().maxCoeff() < 1e-15);
  // ratios survive any anchoring exactly
  const AppCost other = rescale_costs(c, 4, 100.0);
  CHECK(other.c(0) / other.c(3) == doctest::Approx(c.c(0) / c.c(3)).epsilon(1e-12));
  AppCost zero;
  CHECK_THROWS_AS(rescale_costs(zero, 2, 21.0), ZeroAnchor);
}
