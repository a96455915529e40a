#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <random>
#include <sstream>

#include "gio/gof.hpp"
#include "oracles.hpp"

using namespace gio;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("Example 1 abs-gap report") {
  const Polyhedron poly = oracles::example1();
  const FitReport r = rho(poly, vec2(2.5, 3), {NormVariant::ABS_GAP});
  REQUIRE(r.per_row.size() == 4);
  const double expected[4] = {10.0 / 7, 0.4, 4.0 / 3, 2.0 / 3};
  for (int i = 0; i < 4; ++i) {
    REQUIRE(r.per_row[i].eps_norm.has_value());
    CHECK(*r.per_row[i].eps_norm == doctest::Approx(expected[i]).epsilon(1e-9));
    CHECK(r.per_row[i].included_in_denominator);
  }
  CHECK(r.rho == doctest::Approx(0.582090).epsilon(1e-4));
  CHECK(r.rho_tilde == r.rho);  // Prop. 10 part 2
  CHECK_FALSE(r.negative_rho_warning);
}

TEST_CASE("Example 1 p2 report at (2.5,3): all projections feasible") {
  const Polyhedron poly = oracles::example1();
  const FitReport r = rho(poly, vec2(2.5, 3), {NormVariant::P2});
  CHECK(r.rho == doctest::Approx(0.564509).epsilon(1e-5));
  CHECK(r.rho_tilde == doctest::Approx(r.rho).epsilon(1e-9));
}

TEST_CASE("Example 1 p2 report at (4,1.5): face restriction separates rho from rho~") {
  const Polyhedron poly = oracles::example1();
  const FitReport r = rho(poly, vec2(4, 1.5), {NormVariant::P2});
  REQUIRE(r.per_row[2].eps_norm.has_value());
  CHECK(*r.per_row[2].eps_norm == doctest::Approx(2.75).epsilon(1e-6));
  CHECK(r.per_row[2].eps_tilde_norm == doctest::Approx(2.459675).epsilon(1e-5));
  CHECK(r.rho == doctest::Approx(0.865088).epsilon(1e-5));
  CHECK(r.rho_tilde == doctest::Approx(0.858909).epsilon(1e-5));
  CHECK(r.rho > r.rho_tilde);
}

TEST_CASE("boundary point scores a perfect fit") {
  const Polyhedron poly = oracles::example1();
  const FitReport r = rho(poly, vec2(2.5, 1), {NormVariant::P2});
  CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.rho_tilde == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rho~ standalone matches the report and the Example 2 limit") {
  const Polyhedron poly = oracles::example1();
  CHECK(rho_tilde(poly, vec2(2.5, 3), {NormVariant::P2}) ==
        doctest::Approx(0.564509).epsilon(1e-5));
  CHECK(rho_tilde(poly, vec2(2.5, 3), {NormVariant::ABS_GAP}) ==
        doctest::Approx(rho(poly, vec2(2.5, 3), {NormVariant::ABS_GAP}).rho).epsilon(1e-12));

  // Example 2: rho~ -> 2*delta/(3-delta), rho -> 1 as nu grows.
  const double delta = 0.1;
  const double limit = 2 * delta / (3 - delta);
  double prev_err = 1e300;
  for (double nu : {1e2, 1e4, 1e6}) {
    const Polyhedron p2 = oracles::example2(nu, delta);
    const double rt = rho_tilde(p2, vec2(1, 1), {NormVariant::P2});
    const double err = std::abs(rt - limit);
    CHECK(err < prev_err + 1e-12);
    prev_err = err;
    if (nu == 1e6) {
      CHECK(err < 5e-3);
      CHECK(rho(p2, vec2(1, 1), {NormVariant::P2}).rho > 0.9);
    }
  }
}

TEST_CASE("grid over Example 1: bounds, ordering and the hot corner") {
  const Polyhedron poly = oracles::example1();
  const auto grid = rho_grid(poly, {NormVariant::P2}, 21);
  REQUIRE(!grid.empty());
  double max_rho = 0.0, max_diff = -1.0;
  GridPoint hot{};
  for (const auto& g : grid) {
    CHECK(g.rho >= -1e-9);
    CHECK(g.rho <= 1.0 + 1e-9);
    CHECK(g.rho_tilde <= g.rho + 1e-9);  // Prop. 10 part 1
    max_rho = std::max(max_rho, g.rho);
    if (g.rho - g.rho_tilde > max_diff) {
      max_diff = g.rho - g.rho_tilde;
      hot = g;
    }
  }
  CHECK(max_rho > 0.9);  // near-boundary cells approach a perfect fit
  // the largest rho - rho~ difference sits in the bottom-right region
  CHECK(hot.x1 > 2.875);
  CHECK(hot.x2 < 2.0);

  // deterministic output ordering and CSV shape
  const auto again = rho_grid(poly, {NormVariant::P2}, 21);
  REQUIRE(grid.size() == again.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].x1 == again[i].x1);
    CHECK(grid[i].rho == again[i].rho);
  }
  std::ostringstream os;
  write_grid_csv(os, grid);
  const std::string csv = os.str();
  CHECK(csv.rfind("x1,x2,rho,rho_tilde\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == grid.size() + 1);
}

TEST_CASE("rel-gap rho equals rho~ on the grid") {
  const Polyhedron poly = oracles::example1();
  for (const auto& g : rho_grid(poly, {NormVariant::REL_GAP}, 9))
    CHECK(g.rho == doctest::Approx(g.rho_tilde).epsilon(1e-12));
}

TEST_CASE("grid rejects unsupported inputs") {
  std::mt19937_64 rng(4);
  const Polyhedron poly3 = oracles::random_covering_polyhedron(rng, 3, 4);
  CHECK_THROWS_AS(rho_grid(poly3, {NormVariant::P2}, 10), DimensionUnsupported);
  const Polyhedron poly2 = oracles::random_covering_polyhedron(rng, 2, 3);
  CHECK_THROWS_AS(rho_grid(poly2, {NormVariant::P2}, 10), UnboundedPolyhedron);
  CHECK_THROWS_AS(rho_grid(oracles::example1(), {NormVariant::P2}, 1), InvalidInput);
}

TEST_CASE("unadjusted constrained rho can go negative, flagged") {
  const Polyhedron poly = oracles::example1();
  StructuralConstraints sc;
  CostConstraintSet cc;
  cc.eq_rows.resize(0, 2);
  cc.ineq_rows.resize(0, 2);
  cc.zero_pattern.push_back(0);  // pin cost direction to (0, 1)
  sc.cost = cc;
  const FitReport r = rho(poly, vec2(2.5, 3), {NormVariant::ABS_GAP}, &sc, false);
  CHECK(r.loss_star == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(r.rho < 0.0);
  CHECK(r.negative_rho_warning);

  // adjusted: every unconstrained row error is unreachable under the set
  CHECK_THROWS_AS(rho(poly, vec2(2.5, 3), {NormVariant::ABS_GAP}, &sc, true),
                  EmptyDenominator);
}

TEST_CASE("eps-constrained denominators follow the restricted projections") {
  const Polyhedron poly = oracles::example1();
  StructuralConstraints sc;
  EpsConstraintSet ec;
  ec.eq_rows.resize(1, 2);
  ec.eq_rows << 1, 0;
  ec.eq_rhs.resize(1);
  ec.eq_rhs << 0;
  ec.ineq_rows.resize(0, 2);
  sc.eps = ec;
  const FitReport r = rho(poly, vec2(2.5, 3), {NormVariant::P2}, &sc, true);
  REQUIRE(r.per_row.size() == 4);
  CHECK(r.per_row[0].included_in_denominator);
  CHECK(r.per_row[1].included_in_denominator);
  CHECK_FALSE(r.per_row[2].included_in_denominator);  // vertical line misses face 3
  CHECK_FALSE(r.per_row[3].included_in_denominator);
  CHECK(*r.per_row[0].eps_norm == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(r.loss_star == doctest::Approx(2.0 / 3).epsilon(1e-6));
  CHECK(r.rho == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("optimality: no per-row candidate beats rho") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rp = oracles::random_polytope_2d(rng, static_cast<int>(rng() % 4));
    const Eigen::Vector2d pt = oracles::random_interior_point(rng, rp);
    const FitReport r = rho(rp.poly, pt, {NormVariant::P2});
    for (const auto& row : r.per_row) {
      if (!row.eps_norm) continue;
      CHECK(1.0 - *row.eps_norm / r.denominator <= r.rho + 1e-9);
    }
  }
}

TEST_CASE("quasiconvexity along random segments") {
  std::mt19937_64 rng(15);
  const Polyhedron poly = oracles::example1();
  auto sample = [&]() {
    while (true) {
      const Eigen::VectorXd p = vec2(oracles::uniform(rng, 0.75, 5.0),
                                     oracles::uniform(rng, 0.0, 4.0));
      if (classify(poly, p) != PointClass::INFEASIBLE) return p;
    }
  };
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::VectorXd a = sample(), b = sample();
    const double cap = std::max(rho(poly, a, {NormVariant::P2}).rho,
                                rho(poly, b, {NormVariant::P2}).rho);
    const double cap_t = std::max(rho_tilde(poly, a, {NormVariant::P2}),
                                  rho_tilde(poly, b, {NormVariant::P2}));
    for (int k = 1; k <= 5; ++k) {
      const double lam = k / 6.0;
      const Eigen::VectorXd mid = lam * a + (1 - lam) * b;
      CHECK(rho(poly, mid, {NormVariant::P2}).rho <= cap + 1e-6);
      CHECK(rho_tilde(poly, mid, {NormVariant::P2}) <= cap_t + 1e-6);
    }
  }
}

TEST_CASE("radial monotonicity toward the boundary") {
  const Polyhedron poly = oracles::example1();
  // interior minimizer estimate: coarse grid argmin of rho
  Eigen::Vector2d x_min(2.5, 2.0);
  double best = 2.0;
  for (const auto& g : rho_grid(poly, {NormVariant::P2}, 15)) {
    if (g.rho < best) {
      best = g.rho;
      x_min = {g.x1, g.x2};
    }
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    // walk from x_min toward a boundary projection x*
    const Eigen::VectorXd pt =
        vec2(oracles::uniform(rng, 1.0, 4.5), oracles::uniform(rng, 0.3, 3.5));
    if (classify(poly, pt) == PointClass::INFEASIBLE) continue;
    const Eigen::VectorXd x_star = solve_gio(poly, x_min, {NormVariant::P2}).x_star;
    double prev = -1.0;
    for (int k = 0; k <= 6; ++k) {
      const double lam = k / 6.0;  // 0 at x*, 1 at x_min
      const Eigen::VectorXd z = lam * Eigen::VectorXd(x_min) + (1 - lam) * x_star;
      if (classify(poly, z) == PointClass::INFEASIBLE) continue;
      const double val = rho(poly, z, {NormVariant::P2}).rho;
      if (prev >= 0.0) CHECK(val <= prev + 1e-6);  // closer to x* scores higher
      prev = val;
    }
  }
}

TEST_CASE("concurrent evaluation on shared inputs is race-free and identical") {
  const Polyhedron poly = oracles::example1();
  auto worker = [&poly](double x1, double x2) {
    double acc = 0.0;
    for (int k = 0; k < 40; ++k)
      acc += rho(poly, Eigen::Vector2d(x1, x2 + 0.01 * k), {NormVariant::P2}).rho;
    return acc;
  };
  std::vector<std::future<double>> jobs;
  for (int t = 0; t < 4; ++t)
    jobs.push_back(std::async(std::launch::async, worker, 2.0 + 0.2 * t, 1.5));
  for (int t = 0; t < 4; ++t) {
    const double parallel = jobs[t].get();
    CHECK(parallel == doctest::Approx(worker(2.0 + 0.2 * t, 1.5)).epsilon(1e-15));
  }
}

TEST_CASE("scale invariance of rho and rho~") {
  std::mt19937_64 rng(42);
  const Polyhedron poly = oracles::example1();
  Eigen::MatrixXd rows = poly.rows();
  Eigen::VectorXd rhs = poly.rhs();
  for (int i = 0; i < rows.rows(); ++i) {
    const double t = oracles::uniform(rng, 0.3, 4.0);
    rows.row(i) *= t;
    rhs(i) *= t;
  }
  const Polyhedron scaled(rows, rhs, poly.row_meta());
  const Eigen::VectorXd pt = vec2(2.5, 3);
  for (NormVariant nv : {NormVariant::P1, NormVariant::P2, NormVariant::PINF,
                         NormVariant::ABS_GAP, NormVariant::REL_GAP}) {
    const FitReport a = rho(poly, pt, {nv});
    const FitReport b = rho(scaled, pt, {nv});
    CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-9));
    CHECK(a.rho_tilde == doctest::Approx(b.rho_tilde).epsilon(1e-9));
  }
}
