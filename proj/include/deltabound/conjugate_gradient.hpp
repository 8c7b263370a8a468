#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "deltabound/errors.hpp"
#include "deltabound/sparse_matrix.hpp"

namespace deltabound {

namespace detail {

/// Outcome of a CG run that never throws: callers that can live with a
/// best-effort iterate (inexact inverse iteration) read the flags, the
/// strict front end below converts them into errors.
template <class Scalar>
struct CgOutcome {
  Vector<Scalar> x;
  Scalar rel_residual;     // ||A x - b|| / ||b||, recomputed directly
  int iterations;
  bool converged;          // rel_residual <= tol on a recomputed residual
  bool definiteness_lost;  // nonpositive curvature or residual blow-up
};

template <class Scalar>
CgOutcome<Scalar> cg_solve(const SymmetricSparseMatrix<Scalar>& a,
                           const VectorView<Scalar>& b, Scalar tol,
                           int max_iter) {
  if (b.size() != a.dim)
    throw std::domain_error("conjugate_gradient: dimension mismatch");
  if (!(tol > Scalar(0)))
    throw std::domain_error("conjugate_gradient: tol must be > 0");

  using std::sqrt;
  const Scalar b_norm = b.norm();
  CgOutcome<Scalar> out{Vector<Scalar>::Zero(a.dim), Scalar(0), 0, true, false};
  if (b_norm == Scalar(0)) return out;
  const Scalar target = tol * b_norm;

  Vector<Scalar> r = b;  // residual of x = 0
  Vector<Scalar> p = r;
  Scalar rr = r.squaredNorm();
  std::vector<Scalar> res_history;
  int restarts = 0;
  Scalar stall_mark_res = sqrt(rr);
  int stall_mark_it = 0;

  int it = 0;
  for (; it < max_iter; ++it) {
    const Scalar res = sqrt(rr);
    if (res < Scalar(0.99) * stall_mark_res) {
      stall_mark_res = res;
      stall_mark_it = it;
    }
    if (res <= target) {
      // The recursive residual drifts from the truth on ill-conditioned
      // systems; only a directly recomputed residual counts. Restart from it
      // a couple of times, then concede the floor has been reached.
      Vector<Scalar> true_r = b - matvec(a, out.x);
      const Scalar true_res = true_r.norm();
      if (true_res <= target) {
        out.rel_residual = true_res / b_norm;
        out.iterations = it;
        return out;
      }
      if (++restarts > 2) break;
      r = std::move(true_r);
      p = r;
      rr = r.squaredNorm();
      res_history.clear();
      continue;
    }
    if (res_history.size() >= 10 &&
        res > Scalar(100) * res_history[res_history.size() - 10]) {
      out.definiteness_lost = true;  // SPD residuals oscillate, not explode
      break;
    }
    // No percent-level progress across a long stretch: the rounding floor.
    if (it - stall_mark_it > 100) break;
    res_history.push_back(res);

    const Vector<Scalar> ap = matvec(a, p);
    const Scalar p_ap = p.dot(ap);
    if (!(p_ap > Scalar(0))) {
      out.definiteness_lost = true;
      break;
    }
    const Scalar step = rr / p_ap;
    out.x += step * p;
    r -= step * ap;
    const Scalar rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }

  out.iterations = it;
  out.rel_residual = (b - matvec(a, out.x)).norm() / b_norm;
  out.converged = out.rel_residual <= tol;
  return out;
}

}  // namespace detail

/// Unpreconditioned conjugate gradients for a symmetric positive definite
/// system A z = b. Returns z with ||A z - b|| <= tol * ||b||, verified on a
/// directly recomputed residual. Nonpositive curvature (p' A p <= 0) or a
/// residual blow-up raises MatrixError: on an SPD system the error contracts
/// monotonically, so the residual may oscillate but never explode. An
/// exhausted iteration budget or a stall at the rounding floor raises
/// ConvergenceError.
template <class Scalar>
Vector<Scalar> conjugate_gradient(const SymmetricSparseMatrix<Scalar>& a,
                                  const VectorView<Scalar>& b, Scalar tol,
                                  int max_iter = 10000) {
  detail::CgOutcome<Scalar> out = detail::cg_solve(a, b, tol, max_iter);
  if (out.definiteness_lost)
    throw MatrixError(
        "conjugate_gradient: nonpositive curvature or residual blow-up; "
        "matrix is not positive definite");
  if (!out.converged)
    throw ConvergenceError(
        "conjugate_gradient: no convergence within " +
        std::to_string(max_iter) + " iterations (relative residual " +
        std::to_string(double(out.rel_residual)) + ")");
  return std::move(out.x);
}

}  // namespace deltabound
