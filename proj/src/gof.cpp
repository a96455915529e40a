#include "gio/gof.hpp"

#include <cmath>
#include <ostream>

#include "gio/format.hpp"
#include "gio/inverse.hpp"
#include "gio/lp.hpp"

namespace gio {

namespace {

InverseSolution solve_numerator(const Polyhedron& poly, const Eigen::VectorXd& x_hat,
                                NormSpec norm, const StructuralConstraints* constraints) {
  if (constraints && constraints->cost && constraints->eps)
    throw InvalidInput("provide constraints on c or on eps, not both");
  if (constraints && constraints->cost)
    return solve_gio_constrained_cost(poly, x_hat, norm, *constraints->cost);
  if (constraints && constraints->eps)
    return solve_gio_constrained_eps(poly, x_hat, norm, *constraints->eps);
  return solve_gio(poly, x_hat, norm);
}

double mean_or_throw(const std::vector<double>& vals, const char* what) {
  if (vals.empty()) throw EmptyDenominator(what);
  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum / static_cast<double>(vals.size());
}

double ratio_to_rho(double loss, double denom) {
  if (denom <= 0.0) return 1.0;  // all per-row errors vanish: perfect fit by convention
  return 1.0 - loss / denom;
}

}  // namespace

FitReport rho(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
              const StructuralConstraints* constraints, bool adjust_denominator) {
  const InverseSolution sol = solve_numerator(poly, x_hat, norm, constraints);
  const Eigen::VectorXd s = slack(poly, x_hat);
  const int m = poly.num_rows();

  FitReport report;
  report.variant = norm;
  report.loss_star = sol.loss;
  report.per_row.resize(m);

  const bool rel = norm.variant == NormVariant::REL_GAP;
  const bool gap = norm.is_duality_gap();

  std::vector<std::optional<double>> face_norms;
  if (!gap) {
    const EpsConstraintSet* ec =
        (adjust_denominator && constraints && constraints->eps) ? &*constraints->eps : nullptr;
    face_norms = per_row_projection_norms(poly, x_hat, norm, ec);
  }

  std::vector<double> included, included_tilde;
  for (int i = 0; i < m; ++i) {
    PerRowFit& row = report.per_row[i];
    row.row = i;
    const double b = poly.rhs()(i);
    if (rel && b == 0.0) continue;  // undefined ratio: excluded entirely
    row.eps_tilde_norm = s(i) / dual_norm_of_row(poly.row(i), norm, b);
    included_tilde.push_back(row.eps_tilde_norm);

    if (gap) {
      row.eps_norm = row.eps_tilde_norm;  // gap errors ignore primal feasibility
      bool include = true;
      if (adjust_denominator && constraints && constraints->cost) {
        const double pinned = rel ? poly.row(i).dot(x_hat) / b : *row.eps_norm;
        include = gap_value_feasible(poly, x_hat, norm, pinned, *constraints->cost);
      }
      row.included_in_denominator = include;
    } else {
      row.eps_norm = face_norms[i];
      row.included_in_denominator = face_norms[i].has_value();
    }
    if (row.included_in_denominator) included.push_back(*row.eps_norm);
  }

  report.denominator = mean_or_throw(included, "every row was excluded from the denominator");
  report.denominator_tilde =
      mean_or_throw(included_tilde, "every row was excluded from the denominator");
  report.rho = ratio_to_rho(report.loss_star, report.denominator);
  report.rho_tilde = ratio_to_rho(report.loss_star, report.denominator_tilde);
  report.negative_rho_warning = report.rho < 0.0 || report.rho_tilde < 0.0;
  return report;
}

double rho_tilde(const Polyhedron& poly, const Eigen::VectorXd& x_hat, NormSpec norm,
                 const StructuralConstraints* constraints) {
  const InverseSolution sol = solve_numerator(poly, x_hat, norm, constraints);
  const Eigen::VectorXd s = slack(poly, x_hat);
  std::vector<double> terms;
  for (int i = 0; i < poly.num_rows(); ++i) {
    const double b = poly.rhs()(i);
    if (norm.variant == NormVariant::REL_GAP && b == 0.0) continue;
    terms.push_back(s(i) / dual_norm_of_row(poly.row(i), norm, b));
  }
  if (terms.empty()) throw RelGapZeroRhs("every row has b_i = 0");
  return ratio_to_rho(sol.loss, mean_or_throw(terms, "empty denominator"));
}

std::vector<GridPoint> rho_grid(const Polyhedron& poly, NormSpec norm, int resolution) {
  if (poly.dim() != 2) throw DimensionUnsupported("grid sampling is 2-D only");
  if (resolution < 2) throw InvalidInput("resolution must be >= 2");

  double lo[2], hi[2];
  for (int axis = 0; axis < 2; ++axis) {
    for (int dir = 0; dir < 2; ++dir) {
      lp::Problem p = lp::Problem::make(2);
      p.objective(axis) = dir == 0 ? 1.0 : -1.0;
      for (int i = 0; i < poly.num_rows(); ++i)
        p.add_row(poly.row(i), lp::Sense::GE, poly.rhs()(i));
      lp::Solution s = lp::solve(p);
      if (s.status == lp::Status::UNBOUNDED)
        throw UnboundedPolyhedron("grid sampling requires a bounded polyhedron");
      if (!s.optimal()) throw InvalidInput("polyhedron is empty");
      (dir == 0 ? lo : hi)[axis] = s.x(axis);
    }
  }

  std::vector<GridPoint> grid;
  for (int i = 0; i < resolution; ++i) {
    const double x1 = lo[0] + (hi[0] - lo[0]) * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double x2 = lo[1] + (hi[1] - lo[1]) * j / (resolution - 1);
      Eigen::Vector2d pt(x1, x2);
      if (slack(poly, pt).minCoeff() < kBoundaryTol) continue;  // jitter guard
      const FitReport r = rho(poly, pt, norm);
      grid.push_back({x1, x2, r.rho, r.rho_tilde});
    }
  }
  return grid;
}

void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& grid, int sig_digits) {
  os << "x1,x2,rho,rho_tilde\n";
  for (const GridPoint& g : grid) {
    os << format_sig(g.x1, sig_digits) << ',' << format_sig(g.x2, sig_digits) << ','
       << format_sig(g.rho, sig_digits) << ',' << format_sig(g.rho_tilde, sig_digits) << '\n';
  }
}

}  // namespace gio
