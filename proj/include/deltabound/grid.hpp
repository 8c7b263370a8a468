#pragma once

#include <cmath>
#include <string>

#include "deltabound/errors.hpp"
#include "deltabound/sparse_matrix.hpp"

namespace deltabound {

/// Uniform symmetric grid on [-L, L] with n nodes per axis. n is odd, so the
/// node (n-1)/2 sits at coordinate 0 exactly, where the delta wells act. The
/// outermost nodes are Dirichlet walls: they stay in the unknown vector (a
/// 2D grid carries n*n values) but are decoupled from the interior and pinned
/// to zero by the Hamiltonian builders.
struct Grid {
  int dim;             // 1 or 2
  Index n;             // nodes per axis, odd, >= 31
  double half_length;  // L, bohr
  double spacing;      // h = 2L/(n-1)

  static Grid make_1d(Index n, double half_length) { return make(1, n, half_length); }
  static Grid make_2d(Index n, double half_length) { return make(2, n, half_length); }

  Index node_count() const { return dim == 1 ? n : n * n; }
  Index center() const { return (n - 1) / 2; }

  /// Coordinate of axis node i; exact 0 at the center index.
  double coordinate(Index i) const {
    return static_cast<double>(i - center()) * spacing;
  }

  bool is_wall(Index i) const { return i == 0 || i == n - 1; }

 private:
  static Grid make(int dim, Index n, double half_length) {
    if (n < 31 || n % 2 == 0)
      throw GridError("Grid: n must be odd and >= 31, got " + std::to_string(n));
    if (!(std::isfinite(half_length) && half_length > 0.0))
      throw GridError("Grid: half_length must be finite and > 0");
    return {dim, n, half_length, 2.0 * half_length / static_cast<double>(n - 1)};
  }
};

}  // namespace deltabound
