#pragma once

#include <stdexcept>
#include <string>

namespace gio {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input was malformed (bad dimensions are reported via DimensionMismatch).
struct InvalidInput : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroRow : Error {
  using Error::Error;
};

/// Relative-gap machinery needs at least one nonzero right-hand side.
struct RelGapZeroRhs : Error {
  using Error::Error;
};

struct InfeasiblePoint : Error {
  using Error::Error;
};

/// The face {x in X : a_i'x = b_i} of the requested row is empty.
struct EmptyFace : Error {
  using Error::Error;
};

struct ConstraintInfeasible : Error {
  using Error::Error;
};

/// ||c||_1 = 1 cannot be written as a linear constraint without sign info.
struct SignPatternRequired : Error {
  using Error::Error;
};

struct NoFeasibleProjection : Error {
  using Error::Error;
};

struct EmptyDenominator : Error {
  using Error::Error;
};

struct BothBranchesInfeasible : Error {
  using Error::Error;
};

struct DimensionUnsupported : Error {
  using Error::Error;
};

struct UnboundedPolyhedron : Error {
  using Error::Error;
};

struct ZeroAnchor : Error {
  using Error::Error;
};

}  // namespace gio
