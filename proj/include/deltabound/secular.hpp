#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "deltabound/ansatz.hpp"
#include "deltabound/errors.hpp"
#include "deltabound/params.hpp"
#include "deltabound/root_finding.hpp"

namespace deltabound {

/// Bound-state condition in atomic units:
///
///   f(k, x) = 1 - k^2/2 - e^{-sqrt2 k x}
///
/// obtained by eliminating the amplitudes A, B from the delta-line matching
/// conditions. k = 0 solves for every x and is the trivial root; the
/// admissible decay constant is the unique root in (0, sqrt2).
template <class Scalar>
Scalar secular(Scalar k, Scalar x) {
  using std::exp;
  using std::isfinite;
  if (!(isfinite(k) && isfinite(x)))
    throw std::domain_error("secular: non-finite input");
  if (!(k >= Scalar(0))) throw std::domain_error("secular: k must be >= 0");
  if (!(x > Scalar(0)))
    throw std::domain_error(
        "secular: x must be > 0 (at x = 0 every k solves and the root "
        "condition is vacuous)");
  return Scalar(1) - k * k / Scalar(2) -
         exp(-Scalar(std::numbers::sqrt2) * k * x);
}

/// d f / d k, used for Newton polish of a bisection root.
template <class Scalar>
Scalar secular_dk(Scalar k, Scalar x) {
  using std::exp;
  return -k + Scalar(std::numbers::sqrt2) * x *
                  exp(-Scalar(std::numbers::sqrt2) * k * x);
}

/// General-units form of the same condition with unit couplings,
///   m/hbar^2 - (hbar^2/m) k^2/2 - (m/hbar^2) e^{-sqrt2 k x},
/// kept for documentation parity with the atomic-units solver. It reduces to
/// secular(k, x) at hbar = m = 1 and is not wired into the root search.
template <class Scalar>
Scalar secular_general(Scalar k, Scalar x, const PhysicalParams& p) {
  using std::exp;
  p.validate();
  if (!(std::isfinite(double(k)) && std::isfinite(double(x))))
    throw std::domain_error("secular_general: non-finite input");
  if (!(x > Scalar(0))) throw std::domain_error("secular_general: x must be > 0");
  const Scalar m_over_h2 = Scalar(p.mass / (p.hbar * p.hbar));
  const Scalar h2_over_m = Scalar(p.hbar * p.hbar / p.mass);
  return m_over_h2 - h2_over_m * k * k / Scalar(2) -
         m_over_h2 * exp(-Scalar(std::numbers::sqrt2) * k * x);
}

/// E = -k^2/2 in atomic units.
template <class Scalar>
Scalar energy_from_k(Scalar k) {
  using std::isfinite;
  if (!isfinite(k)) throw std::domain_error("energy_from_k: non-finite k");
  if (!(k >= Scalar(0))) throw std::domain_error("energy_from_k: k must be >= 0");
  return -k * k / Scalar(2);
}

/// E = -hbar^2 k^2 / (2m), general units.
template <class Scalar>
Scalar energy_from_k(Scalar k, const PhysicalParams& p) {
  p.validate();
  if (!std::isfinite(double(k)))
    throw std::domain_error("energy_from_k: non-finite k");
  return -Scalar(p.hbar * p.hbar) * k * k / (Scalar(2) * Scalar(p.mass));
}

/// Amplitude ratio B/A = k/sqrt2 - 1 fixed by the matching condition on the
/// well lines (atomic units). Negative for k < sqrt2: the contact term is
/// subtracted, carving a hole along x = y. Tends to 0 in the uncorrelated
/// limit k -> sqrt2 and to -1 as k -> 0+.
template <class Scalar>
Scalar amplitude_ratio(Scalar k) {
  using std::isfinite;
  if (!isfinite(k)) throw std::domain_error("amplitude_ratio: non-finite k");
  if (!(k > Scalar(0))) throw std::domain_error("amplitude_ratio: k must be > 0");
  return k / Scalar(std::numbers::sqrt2) - Scalar(1);
}

/// One solved point of the model: the admissible decay constant at
/// separation x together with the derived energy and amplitude ratio.
struct ModelSolution {
  double x;          // separation parameter, bohr
  double k;          // decay constant, 1/bohr
  double energy;     // -k^2/2, hartree
  double amp_ratio;  // B/A = k/sqrt2 - 1
};

/// Residuals of the two surviving amplitude conditions at unit couplings:
///
///   diagonal:  (k/sqrt2) B + B + A e^{-sqrt2 k x}   (contact-line jump)
///   axis:      A (1 - k/sqrt2) + B                  (well-line jump)
///
/// Substituting B = amplitude_ratio(k) A into the first gives
/// -A secular(k, x) identically, so both vanish exactly at a solved triple.
struct BoundaryResiduals {
  double diagonal;
  double axis;
};

inline BoundaryResiduals boundary_residuals(const AnsatzWavefunction& w,
                                            double x) {
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error("boundary_residuals: x must be finite and > 0");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double a = w.amp_separable;
  const double b = w.amp_correlation;
  return {
      w.k * inv_sqrt2 * b + b + a * std::exp(-std::numbers::sqrt2 * w.k * x),
      a * (1.0 - w.k * inv_sqrt2) + b,
  };
}

/// Solves secular(k, x) = 0 for the nontrivial root.
///
/// Search bracket [1e-6, sqrt2]: the lower end excludes the trivial root
/// (f is positive there, slope sqrt2 x at 0+), and f(sqrt2) = -e^{-2x} < 0,
/// so a sign change is certified for every practical x. Bisection narrows
/// the bracket to tol, then up to five Newton steps with the analytic
/// derivative polish the root to machine accuracy.
inline ModelSolution solve_k(double x, double tol = 1e-12) {
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error("solve_k: x must be finite and > 0");
  if (!(std::isfinite(tol) && tol > 0.0))
    throw std::domain_error("solve_k: tol must be > 0");

  const double lo = 1e-6;
  const double hi = std::numbers::sqrt2;
  RootResult found;
  try {
    found = find_root_bracketed([x](double k) { return secular(k, x); },
                                Bracket{lo, hi}, tol);
  } catch (const BracketError& e) {
    throw ConvergenceError("solve_k: no sign change in [1e-6, sqrt2] at x = " +
                           std::to_string(x) + " (" + e.what() + ")");
  }

  double k = found.root;
  for (int step = 0; step < 5; ++step) {
    const double f = secular(k, x);
    if (f == 0.0) break;
    const double df = secular_dk(k, x);
    if (df == 0.0) break;
    const double next = k - f / df;
    if (!(next > 0.0 && next <= hi) || next == k) break;
    k = next;
  }

  return {x, k, energy_from_k(k), amplitude_ratio(k)};
}

/// solve_k over a list of separations, in input order. Any per-point failure
/// aborts the sweep with the offending x in the message.
inline std::vector<ModelSolution> sweep(const std::vector<double>& x_values,
                                        double tol = 1e-12) {
  std::vector<ModelSolution> out;
  out.reserve(x_values.size());
  for (const double x : x_values) {
    try {
      out.push_back(solve_k(x, tol));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("sweep failed at x = " + std::to_string(x) +
                             ": " + e.what());
    } catch (const std::domain_error& e) {
      throw std::domain_error("sweep failed at x = " + std::to_string(x) +
                              ": " + e.what());
    }
  }
  return out;
}

/// Box-truncated L2 norm of the ansatz over [-R, R]^2 by composite Simpson
/// quadrature. The contact term is constant along x = y, so the integral
/// over the whole plane diverges and a finite half-width is part of the
/// definition. panels_per_axis must be even; the node set then contains the
/// axes exactly, leaving only the diagonal kink inside cells (O(h^2) error).
inline double ansatz_norm_boxed(const AnsatzWavefunction& w, double half_width,
                                int panels_per_axis = 256) {
  if (!(std::isfinite(half_width) && half_width > 0.0))
    throw std::domain_error("ansatz_norm_boxed: half_width must be > 0");
  if (panels_per_axis < 2 || panels_per_axis % 2 != 0)
    throw std::domain_error("ansatz_norm_boxed: panels_per_axis must be even and >= 2");

  const int n = panels_per_axis;
  const double h = 2.0 * half_width / n;
  const auto weight = [n](int i) {
    if (i == 0 || i == n) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
  };

  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double xi = -half_width + i * h;
    double row = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double yj = -half_width + j * h;
      const double psi = eval_ansatz(w, xi, yj);
      row += weight(j) * psi * psi;
    }
    total += weight(i) * row;
  }
  return total * (h / 3.0) * (h / 3.0);
}

}  // namespace deltabound
