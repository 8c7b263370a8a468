#pragma once

#include <cmath>
#include <utility>

#include "deltabound/errors.hpp"

namespace deltabound {

/// A sign-change interval for a scalar function. find_root_bracketed verifies
/// f(lo)*f(hi) < 0 before it starts iterating.
struct Bracket {
  double lo;
  double hi;
};

struct RootResult {
  double root;     // midpoint of the final bracket
  double f_root;   // f evaluated at root
  double lo;       // final bracket, width <= tol unless an endpoint hit zero
  double hi;
  int iterations;  // bisection steps taken
};

/// Plain bisection on a certified sign change. Deterministic, never evaluates
/// f outside [bracket.lo, bracket.hi], and narrows until hi - lo <= tol or the
/// midpoint is no longer representable between the endpoints.
template <class F>
RootResult find_root_bracketed(F&& f, Bracket bracket, double tol,
                               int max_iter = 200) {
  if (!(std::isfinite(bracket.lo) && std::isfinite(bracket.hi)) ||
      !(bracket.lo < bracket.hi))
    throw BracketError("find_root_bracketed: need finite lo < hi");
  if (!(std::isfinite(tol) && tol > 0.0))
    throw std::domain_error("find_root_bracketed: tol must be > 0");

  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, lo, lo, 0};
  if (fhi == 0.0) return {hi, 0.0, hi, hi, 0};
  if ((flo < 0.0) == (fhi < 0.0))
    throw BracketError("find_root_bracketed: no sign change across bracket");

  int it = 0;
  while (hi - lo > tol) {
    if (it >= max_iter)
      throw ConvergenceError("find_root_bracketed: max_iter exhausted");
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // bracket at floating-point resolution
    ++it;
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  const double root = lo == hi ? lo : 0.5 * (lo + hi);
  return {root, f(root), lo, hi, it};
}

}  // namespace deltabound
