#pragma once

#include <stdexcept>

namespace deltabound {

/// No sign change across the requested interval.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative method exhausted its iteration budget before reaching tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The matrix violated an algorithmic requirement (e.g. CG detected
/// nonpositive curvature on a system that must be positive definite).
struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The eigensolver shift fails to keep the shifted operator positive definite.
struct ShiftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid grid description (even node count, too few nodes, nonpositive box).
struct GridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace deltabound
