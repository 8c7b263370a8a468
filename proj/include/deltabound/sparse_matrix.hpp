#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <type_traits>
#include <string>
#include <vector>

#include "deltabound/errors.hpp"

namespace deltabound {

using Index = Eigen::Index;

template <class Scalar>
using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

/// Read-only view accepting vectors and vector expressions alike. Scalar is
/// intentionally non-deduced here: it comes from the matrix argument.
template <class Scalar>
using VectorView = Eigen::Ref<const Vector<std::type_identity_t<Scalar>>>;

/// Compressed sparse row storage for a structurally symmetric matrix:
/// entry (i, j) is present iff (j, i) is, with equal values. Column indices
/// are strictly increasing within each row.
template <class Scalar>
struct SymmetricSparseMatrix {
  Index dim = 0;
  std::vector<Index> row_offsets;  // length dim + 1, nondecreasing
  std::vector<Index> col_indices;
  std::vector<Scalar> values;      // same length as col_indices

  struct Triplet {
    Index row;
    Index col;
    Scalar value;
  };

  /// Builds CSR from an unordered triplet list; duplicates are summed.
  static SymmetricSparseMatrix from_triplets(Index dim,
                                             std::vector<Triplet> entries) {
    if (dim <= 0)
      throw std::domain_error("SymmetricSparseMatrix: dim must be positive");
    for (const Triplet& t : entries) {
      if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
        throw std::domain_error("SymmetricSparseMatrix: triplet index out of range");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Triplet& a, const Triplet& b) {
                return a.row != b.row ? a.row < b.row : a.col < b.col;
              });

    SymmetricSparseMatrix m;
    m.dim = dim;
    m.row_offsets.assign(static_cast<std::size_t>(dim) + 1, 0);
    m.col_indices.reserve(entries.size());
    m.values.reserve(entries.size());
    Index current_row = 0;
    for (const Triplet& t : entries) {
      if (!m.col_indices.empty() && t.row == current_row &&
          t.col == m.col_indices.back()) {
        m.values.back() += t.value;
        continue;
      }
      while (current_row < t.row)
        m.row_offsets[static_cast<std::size_t>(++current_row)] =
            static_cast<Index>(m.col_indices.size());
      m.col_indices.push_back(t.col);
      m.values.push_back(t.value);
    }
    while (current_row < dim)
      m.row_offsets[static_cast<std::size_t>(++current_row)] =
          static_cast<Index>(m.col_indices.size());
    return m;
  }

  Index nonzeros() const { return static_cast<Index>(values.size()); }

  /// Value at (i, j), zero when the entry is absent.
  Scalar coeff(Index i, Index j) const {
    const auto begin = col_indices.begin() + row_offsets[static_cast<std::size_t>(i)];
    const auto end = col_indices.begin() + row_offsets[static_cast<std::size_t>(i) + 1];
    const auto it = std::lower_bound(begin, end, j);
    if (it == end || *it != j) return Scalar(0);
    return values[static_cast<std::size_t>(it - col_indices.begin())];
  }
};

/// Checks the CSR structure and pairwise symmetry |a_ij - a_ji| <= tol.
template <class Scalar>
bool is_structurally_symmetric(const SymmetricSparseMatrix<Scalar>& m,
                               Scalar tol = Scalar(0)) {
  if (m.row_offsets.size() != static_cast<std::size_t>(m.dim) + 1) return false;
  if (m.col_indices.size() != m.values.size()) return false;
  for (Index i = 0; i < m.dim; ++i) {
    const Index begin = m.row_offsets[static_cast<std::size_t>(i)];
    const Index end = m.row_offsets[static_cast<std::size_t>(i) + 1];
    if (begin > end) return false;
    for (Index p = begin; p < end; ++p) {
      const Index j = m.col_indices[static_cast<std::size_t>(p)];
      if (j < 0 || j >= m.dim) return false;
      if (p > begin && j <= m.col_indices[static_cast<std::size_t>(p) - 1])
        return false;  // columns must strictly increase within the row
      const auto row_j_begin =
          m.col_indices.begin() + m.row_offsets[static_cast<std::size_t>(j)];
      const auto row_j_end =
          m.col_indices.begin() + m.row_offsets[static_cast<std::size_t>(j) + 1];
      const auto mirror = std::lower_bound(row_j_begin, row_j_end, i);
      if (mirror == row_j_end || *mirror != i) return false;
      const Scalar mirrored =
          m.values[static_cast<std::size_t>(mirror - m.col_indices.begin())];
      using std::abs;
      if (abs(m.values[static_cast<std::size_t>(p)] - mirrored) > tol)
        return false;
    }
  }
  return true;
}

/// Sparse matrix-vector product M v. Accepts any dense vector expression.
template <class Scalar>
Vector<Scalar> matvec(const SymmetricSparseMatrix<Scalar>& m,
                      const VectorView<Scalar>& v) {
  if (v.size() != m.dim)
    throw std::domain_error("matvec: dimension mismatch (" +
                            std::to_string(v.size()) + " vs " +
                            std::to_string(m.dim) + ")");
  Vector<Scalar> out = Vector<Scalar>::Zero(m.dim);
  for (Index i = 0; i < m.dim; ++i) {
    Scalar acc(0);
    const Index end = m.row_offsets[static_cast<std::size_t>(i) + 1];
    for (Index p = m.row_offsets[static_cast<std::size_t>(i)]; p < end; ++p)
      acc += m.values[static_cast<std::size_t>(p)] *
             v[m.col_indices[static_cast<std::size_t>(p)]];
    out[i] = acc;
  }
  return out;
}

/// M - sigma I. Rows that lack a diagonal entry get one inserted.
template <class Scalar>
SymmetricSparseMatrix<Scalar> subtract_shift(
    const SymmetricSparseMatrix<Scalar>& m, Scalar sigma) {
  bool full_diagonal = true;
  for (Index i = 0; i < m.dim && full_diagonal; ++i) {
    const auto begin = m.col_indices.begin() + m.row_offsets[static_cast<std::size_t>(i)];
    const auto end = m.col_indices.begin() + m.row_offsets[static_cast<std::size_t>(i) + 1];
    full_diagonal = std::binary_search(begin, end, i);
  }

  if (full_diagonal) {
    SymmetricSparseMatrix<Scalar> out = m;
    for (Index i = 0; i < m.dim; ++i) {
      const auto begin = out.col_indices.begin() + out.row_offsets[static_cast<std::size_t>(i)];
      const auto end = out.col_indices.begin() + out.row_offsets[static_cast<std::size_t>(i) + 1];
      const auto it = std::lower_bound(begin, end, i);
      out.values[static_cast<std::size_t>(it - out.col_indices.begin())] -= sigma;
    }
    return out;
  }

  std::vector<typename SymmetricSparseMatrix<Scalar>::Triplet> entries;
  entries.reserve(m.values.size() + static_cast<std::size_t>(m.dim));
  for (Index i = 0; i < m.dim; ++i) {
    const Index end = m.row_offsets[static_cast<std::size_t>(i) + 1];
    for (Index p = m.row_offsets[static_cast<std::size_t>(i)]; p < end; ++p)
      entries.push_back({i, m.col_indices[static_cast<std::size_t>(p)],
                         m.values[static_cast<std::size_t>(p)]});
    entries.push_back({i, i, -sigma});
  }
  return SymmetricSparseMatrix<Scalar>::from_triplets(m.dim, std::move(entries));
}

using SymmetricSparseMatrixd = SymmetricSparseMatrix<double>;
using Vectord = Vector<double>;

}  // namespace deltabound
