#pragma once

#include <vector>

#include "deltabound/errors.hpp"
#include "deltabound/grid.hpp"
#include "deltabound/params.hpp"
#include "deltabound/sparse_matrix.hpp"

namespace deltabound {

/// Finite-difference Hamiltonians. A delta potential of strength s acting on
/// a node (or a grid line of nodes) contributes s/h on those nodes, which
/// preserves the potential's integral under the grid quadrature. Wall rows
/// keep only the kinetic diagonal and no neighbors, which enforces psi = 0
/// there without disturbing the interior stencil.

/// One electron in a single delta well:
///   H = -(hbar^2/2m) d^2/dx^2 - alpha d(x), 3-point Laplacian, tridiagonal.
inline SymmetricSparseMatrixd hamiltonian_1d(const Grid& grid,
                                             const PhysicalParams& params) {
  if (grid.dim != 1) throw GridError("hamiltonian_1d: grid.dim must be 1");
  params.validate();

  const double h = grid.spacing;
  const double hop = -params.hbar * params.hbar / (2.0 * params.mass * h * h);
  const double kinetic_diag = -2.0 * hop;  // hbar^2/(m h^2)
  const Index n = grid.n;
  const Index c = grid.center();

  std::vector<SymmetricSparseMatrixd::Triplet> entries;
  entries.reserve(static_cast<std::size_t>(3 * n));
  for (Index i = 0; i < n; ++i) {
    if (grid.is_wall(i)) {
      entries.push_back({i, i, kinetic_diag});
      continue;
    }
    double diag = kinetic_diag;
    if (i == c) diag -= params.alpha / h;
    entries.push_back({i, i, diag});
    for (const Index j : {i - 1, i + 1})
      if (!grid.is_wall(j)) entries.push_back({i, j, hop});
  }
  return SymmetricSparseMatrixd::from_triplets(n, std::move(entries));
}

/// Two electrons, wells on both axes, contact repulsion on the diagonal:
///   H = -(hbar^2/2m) (d^2/dx^2 + d^2/dy^2)
///       - alpha d(x) - alpha d(y) + lambda d(x-y)
/// on the 5-point Laplacian. Node (i, j) maps to unknown i*n + j; the well
/// lines are the grid lines x = 0 and y = 0, the repulsion sits on i = j.
inline SymmetricSparseMatrixd hamiltonian_2d(const Grid& grid,
                                             const PhysicalParams& params) {
  if (grid.dim != 2) throw GridError("hamiltonian_2d: grid.dim must be 2");
  params.validate();

  const double h = grid.spacing;
  const double hop = -params.hbar * params.hbar / (2.0 * params.mass * h * h);
  const double kinetic_diag = -4.0 * hop;  // 2 hbar^2/(m h^2)
  const Index n = grid.n;
  const Index c = grid.center();
  const auto node = [n](Index i, Index j) { return i * n + j; };

  std::vector<SymmetricSparseMatrixd::Triplet> entries;
  entries.reserve(static_cast<std::size_t>(5 * n * n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Index row = node(i, j);
      if (grid.is_wall(i) || grid.is_wall(j)) {
        entries.push_back({row, row, kinetic_diag});
        continue;
      }
      double diag = kinetic_diag;
      if (i == c) diag -= params.alpha / h;
      if (j == c) diag -= params.alpha / h;
      if (i == j) diag += params.lambda / h;
      entries.push_back({row, row, diag});
      const Index neighbors[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto& nb : neighbors)
        if (!grid.is_wall(nb[0]) && !grid.is_wall(nb[1]))
          entries.push_back({row, node(nb[0], nb[1]), hop});
    }
  }
  return SymmetricSparseMatrixd::from_triplets(n * n, std::move(entries));
}

/// Certified lower spectral bound from Gershgorin discs, with margin. Every
/// row of either builder has diagonal >= kinetic_diag - 2 alpha/h and
/// off-diagonal magnitude sum <= kinetic_diag, so the spectrum lies above
/// -2 alpha/h; subtracting lambda/h and the full kinetic diagonal on top
/// keeps the returned shift strictly below it.
inline double gershgorin_shift(const Grid& grid, const PhysicalParams& params) {
  const double h = grid.spacing;
  return -(2.0 * params.alpha / h + params.lambda / h +
           4.0 * params.hbar * params.hbar / (params.mass * h * h));
}

}  // namespace deltabound
