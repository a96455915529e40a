#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gio/errors.hpp"

namespace gio {

/// Default slack tolerance for boundary classification.
inline constexpr double kBoundaryTol = 1e-8;

enum class ConstraintSense { GE, LE, EQ };

/// Provenance of a canonical row.
enum class RowOrigin { GE, LE_FLIPPED, EQ_SPLIT_LO, EQ_SPLIT_HI, NONNEG };

enum class NormVariant { P1, P2, PINF, ABS_GAP, REL_GAP };

/// Loss norm selector. The duality-gap variants carry their own dual-norm
/// rules, so they live alongside the p-norms here.
struct NormSpec {
  NormVariant variant = NormVariant::P2;

  bool is_duality_gap() const {
    return variant == NormVariant::ABS_GAP || variant == NormVariant::REL_GAP;
  }
  std::string name() const;
  static NormSpec parse(const std::string& token);
};

struct RowMeta {
  int original_id = 0;
  RowOrigin origin = RowOrigin::GE;
};

/// One constraint as supplied by the caller, before canonicalization.
struct RawConstraint {
  Eigen::VectorXd coeffs;
  ConstraintSense sense = ConstraintSense::GE;
  double rhs = 0.0;
  bool nonneg_marker = false;  // tags variable-bound rows for provenance
};

/// Feasible set in canonical form: every row stored as a'x >= b.
/// LE rows arrive negated, EQ rows arrive as two opposing GE rows.
class Polyhedron {
 public:
  Polyhedron(Eigen::MatrixXd rows, Eigen::VectorXd rhs, std::vector<RowMeta> meta);

  const Eigen::MatrixXd& rows() const { return rows_; }
  const Eigen::VectorXd& rhs() const { return rhs_; }
  const std::vector<RowMeta>& row_meta() const { return meta_; }

  int num_rows() const { return static_cast<int>(rows_.rows()); }
  int dim() const { return static_cast<int>(rows_.cols()); }
  Eigen::VectorXd row(int i) const { return rows_.row(i).transpose(); }

 private:
  Eigen::MatrixXd rows_;
  Eigen::VectorXd rhs_;
  std::vector<RowMeta> meta_;
};

enum class PointClass { INTERIOR, BOUNDARY, INFEASIBLE };

std::string to_string(PointClass c);
std::string to_string(RowOrigin o);

/// Converts a mixed-sense constraint list to Ax >= b form.
Polyhedron canonicalize(const std::vector<RawConstraint>& constraints);

/// Per-row slack a_i'x - b_i.
Eigen::VectorXd slack(const Polyhedron& poly, const Eigen::VectorXd& point);

PointClass classify(const Polyhedron& poly, const Eigen::VectorXd& point,
                    double tol = kBoundaryTol);

/// ||a||_L^D for the given loss norm; REL_GAP needs the row's rhs.
double dual_norm_of_row(const Eigen::VectorXd& a, NormSpec norm, double rhs_b = 0.0);

/// A maximizer v of a'v over the unit ball of the loss norm, so that
/// a'v equals dual_norm_of_row(a). P1 ties resolve to the smallest index.
Eigen::VectorXd v_maximizer(const Eigen::VectorXd& a, NormSpec norm, double rhs_b = 0.0);

}  // namespace gio
