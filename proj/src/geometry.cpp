#include "gio/geometry.hpp"

#include <cmath>

namespace gio {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) throw InvalidInput(std::string(what) + " contains non-finite entries");
}

}  // namespace

std::string NormSpec::name() const {
  switch (variant) {
    case NormVariant::P1: return "p1";
    case NormVariant::P2: return "p2";
    case NormVariant::PINF: return "pinf";
    case NormVariant::ABS_GAP: return "abs";
    case NormVariant::REL_GAP: return "rel";
  }
  return "?";
}

NormSpec NormSpec::parse(const std::string& token) {
  if (token == "p1") return {NormVariant::P1};
  if (token == "p2") return {NormVariant::P2};
  if (token == "pinf") return {NormVariant::PINF};
  if (token == "abs") return {NormVariant::ABS_GAP};
  if (token == "rel") return {NormVariant::REL_GAP};
  throw InvalidInput("unknown norm token '" + token + "' (expected p1|p2|pinf|abs|rel)");
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::INTERIOR: return "INTERIOR";
    case PointClass::BOUNDARY: return "BOUNDARY";
    case PointClass::INFEASIBLE: return "INFEASIBLE";
  }
  return "?";
}

std::string to_string(RowOrigin o) {
  switch (o) {
    case RowOrigin::GE: return "GE";
    case RowOrigin::LE_FLIPPED: return "LE_flipped";
    case RowOrigin::EQ_SPLIT_LO: return "EQ_split_lo";
    case RowOrigin::EQ_SPLIT_HI: return "EQ_split_hi";
    case RowOrigin::NONNEG: return "NONNEG";
  }
  return "?";
}

Polyhedron::Polyhedron(Eigen::MatrixXd rows, Eigen::VectorXd rhs, std::vector<RowMeta> meta)
    : rows_(std::move(rows)), rhs_(std::move(rhs)), meta_(std::move(meta)) {
  if (rows_.rows() < 1 || rows_.cols() < 1) throw InvalidInput("polyhedron needs m >= 1, n >= 1");
  if (rhs_.size() != rows_.rows() || static_cast<Eigen::Index>(meta_.size()) != rows_.rows())
    throw DimensionMismatch("row/rhs/meta sizes disagree");
  if (!rows_.allFinite() || !rhs_.allFinite()) throw InvalidInput("non-finite polyhedron data");
  for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
    if (rows_.row(i).cwiseAbs().maxCoeff() == 0.0)
      throw ZeroRow("canonical row " + std::to_string(i) + " is the zero vector");
  }
}

Polyhedron canonicalize(const std::vector<RawConstraint>& constraints) {
  if (constraints.empty()) throw InvalidInput("at least one constraint required");
  const Eigen::Index n = constraints.front().coeffs.size();
  Eigen::Index m = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != n) throw DimensionMismatch("constraint rows have mixed dimensions");
    require_finite(c.coeffs, "constraint row");
    if (!std::isfinite(c.rhs)) throw InvalidInput("non-finite rhs");
    m += (c.sense == ConstraintSense::EQ) ? 2 : 1;
  }

  Eigen::MatrixXd rows(m, n);
  Eigen::VectorXd rhs(m);
  std::vector<RowMeta> meta;
  meta.reserve(m);

  Eigen::Index r = 0;
  for (int id = 0; id < static_cast<int>(constraints.size()); ++id) {
    const auto& c = constraints[id];
    switch (c.sense) {
      case ConstraintSense::GE:
        rows.row(r) = c.coeffs.transpose();
        rhs(r) = c.rhs;
        meta.push_back({id, c.nonneg_marker ? RowOrigin::NONNEG : RowOrigin::GE});
        ++r;
        break;
      case ConstraintSense::LE:
        rows.row(r) = -c.coeffs.transpose();
        rhs(r) = -c.rhs;
        meta.push_back({id, RowOrigin::LE_FLIPPED});
        ++r;
        break;
      case ConstraintSense::EQ:
        rows.row(r) = c.coeffs.transpose();
        rhs(r) = c.rhs;
        meta.push_back({id, RowOrigin::EQ_SPLIT_LO});
        ++r;
        rows.row(r) = -c.coeffs.transpose();
        rhs(r) = -c.rhs;
        meta.push_back({id, RowOrigin::EQ_SPLIT_HI});
        ++r;
        break;
    }
  }
  return Polyhedron(std::move(rows), std::move(rhs), std::move(meta));
}

Eigen::VectorXd slack(const Polyhedron& poly, const Eigen::VectorXd& point) {
  if (point.size() != poly.dim()) throw DimensionMismatch("point dimension != polyhedron dimension");
  require_finite(point, "point");
  return poly.rows() * point - poly.rhs();
}

PointClass classify(const Polyhedron& poly, const Eigen::VectorXd& point, double tol) {
  if (tol < 0.0) throw InvalidInput("tol must be >= 0");
  const Eigen::VectorXd s = slack(poly, point);
  if (s.minCoeff() > tol) return PointClass::INTERIOR;
  if (s.minCoeff() >= -tol && s.cwiseAbs().minCoeff() <= tol) return PointClass::BOUNDARY;
  return PointClass::INFEASIBLE;
}

double dual_norm_of_row(const Eigen::VectorXd& a, NormSpec norm, double rhs_b) {
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) throw ZeroRow("dual norm of a zero row");
  switch (norm.variant) {
    case NormVariant::P1: return a.cwiseAbs().maxCoeff();
    case NormVariant::P2: return a.norm();
    case NormVariant::PINF:
    case NormVariant::ABS_GAP: return a.cwiseAbs().sum();
    case NormVariant::REL_GAP:
      if (rhs_b == 0.0) throw RelGapZeroRhs("REL_GAP dual norm undefined for b_i = 0");
      return std::abs(rhs_b);
  }
  throw InvalidInput("bad norm variant");
}

Eigen::VectorXd v_maximizer(const Eigen::VectorXd& a, NormSpec norm, double rhs_b) {
  if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) throw ZeroRow("v_maximizer of a zero row");
  switch (norm.variant) {
    case NormVariant::P1: {
      Eigen::Index j_star = 0;
      a.cwiseAbs().maxCoeff(&j_star);  // first index of max |a_j|
      Eigen::VectorXd v = Eigen::VectorXd::Zero(a.size());
      v(j_star) = sgn(a(j_star));
      return v;
    }
    case NormVariant::P2:
      return a / a.norm();
    case NormVariant::PINF:
    case NormVariant::ABS_GAP:
      return a.unaryExpr([](double x) { return sgn(x); });
    case NormVariant::REL_GAP: {
      if (rhs_b == 0.0) throw RelGapZeroRhs("REL_GAP maximizer undefined for b_i = 0");
      const double scale = std::abs(rhs_b) / a.cwiseAbs().sum();
      return scale * a.unaryExpr([](double x) { return sgn(x); });
    }
  }
  throw InvalidInput("bad norm variant");
}

}  // namespace gio
