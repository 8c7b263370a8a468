#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "deltabound/conjugate_gradient.hpp"
#include "deltabound/errors.hpp"
#include "deltabound/sparse_matrix.hpp"

namespace deltabound {

template <class Scalar>
struct EigenResult {
  Scalar eigenvalue;
  Vector<Scalar> eigenvector;  // unit Euclidean norm
  Scalar residual_norm;        // ||A v - lambda v||, recomputed at the end
  int iterations;              // outer (inverse-iteration) steps
};

/// Smallest eigenpair by shifted inverse power iteration with conjugate
/// gradient inner solves.
///
/// The caller certifies that `shift` sits strictly below the smallest
/// eigenvalue, so A - shift I is positive definite. A certified shift is
/// typically far below the spectrum, where plain inverse iteration crawls:
/// the contamination shrinks only by (l1 - s)/(l2 - s) per step. The
/// iteration therefore walks the shift upward using the a-posteriori bound
/// l1 >= rho - ||r|| (valid once the Rayleigh quotient rho is closest to the
/// target eigenvalue), with a safety margin on ||r||. If an updated shift
/// overshoots, CG reports loss of positive definiteness and the iteration
/// falls back to the last safe shift with a doubled margin. Failure at the
/// caller's own shift is a ShiftError.
///
/// Inner solves are inexact: tolerance max(0.1 * outer residual, 1e-12),
/// capped at 0.1. The starting vector is the normalized all-ones vector,
/// which overlaps the nodeless ground states this solver targets; everything
/// is deterministic.
template <class Scalar>
EigenResult<Scalar> lowest_eigenpair(const SymmetricSparseMatrix<Scalar>& a,
                                     Scalar shift, Scalar tol,
                                     int max_iter = 200) {
  if (a.dim <= 0) throw std::domain_error("lowest_eigenpair: empty matrix");
  if (!(tol > Scalar(0)))
    throw std::domain_error("lowest_eigenpair: tol must be > 0");
  if (!std::isfinite(double(shift)))
    throw std::domain_error("lowest_eigenpair: shift must be finite");

  using std::sqrt;
  Vector<Scalar> v = Vector<Scalar>::Constant(a.dim, Scalar(1) / sqrt(Scalar(a.dim)));
  Vector<Scalar> av = matvec(a, v);
  Scalar rho = v.dot(av);
  Scalar res = (av - rho * v).norm();

  Scalar sigma = shift;
  Scalar safe_sigma = shift;
  Scalar safety = Scalar(1.5);
  bool sigma_is_callers = true;
  SymmetricSparseMatrix<Scalar> shifted = subtract_shift(a, sigma);

  int it = 0;
  while (res > tol) {
    if (++it > max_iter)
      throw ConvergenceError("lowest_eigenpair: max_iter = " +
                             std::to_string(max_iter) +
                             " exhausted, residual = " + std::to_string(double(res)));
    // Tightens with outer progress; capped below 1, otherwise a large early
    // residual would let CG return the zero vector as a valid solution.
    const Scalar inner_tol =
        std::min(Scalar(0.1), std::max(Scalar(0.1) * res, Scalar(1e-12)));
    const detail::CgOutcome<Scalar> inner =
        detail::cg_solve(shifted, VectorView<Scalar>(v), inner_tol, 2000);
    if (inner.definiteness_lost) {
      if (sigma_is_callers)
        throw ShiftError(
            "lowest_eigenpair: A - shift I is not positive definite at the "
            "given shift");
      // The adaptive shift overshot the smallest eigenvalue: back off.
      safety *= Scalar(2);
      sigma = safe_sigma;
      sigma_is_callers = (sigma == shift);
      shifted = subtract_shift(a, sigma);
      continue;
    }
    // A solve that stalled short of its tolerance is still useful: the
    // shifted inverse amplifies the wanted direction regardless, and the
    // outer residual test is the arbiter of convergence.
    if (inner.x.norm() == Scalar(0)) {
      throw ConvergenceError(
          "lowest_eigenpair: inner solve made no progress at shift " +
          std::to_string(double(sigma)));
    }
    safe_sigma = sigma;

    v = inner.x.normalized();
    av = matvec(a, v);
    rho = v.dot(av);
    res = (av - rho * v).norm();

    const Scalar proposed = rho - safety * res;
    if (proposed > sigma && res > tol) {
      sigma = proposed;
      sigma_is_callers = false;
      shifted = subtract_shift(a, sigma);
    }
  }

  // Report a residual recomputed from scratch, not the loop's running value.
  v.normalize();
  av = matvec(a, v);
  rho = v.dot(av);
  res = (av - rho * v).norm();
  return {rho, std::move(v), res, it};
}

}  // namespace deltabound
