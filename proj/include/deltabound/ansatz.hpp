#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "deltabound/errors.hpp"

namespace deltabound {

namespace detail {

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace detail

/// Product term A e^{-k(|x|+|y|)/sqrt2}: each electron decays independently
/// off its own well. Even in x and y separately and symmetric under x <-> y.
template <class Scalar>
Scalar eval_separable(Scalar k, Scalar amp, Scalar x, Scalar y) {
  using std::abs;
  using std::exp;
  using std::isfinite;
  if (!(isfinite(k) && isfinite(amp) && isfinite(x) && isfinite(y)))
    throw std::domain_error("eval_separable: non-finite input");
  if (!(k > Scalar(0))) throw std::domain_error("eval_separable: k must be > 0");
  return amp * exp(-k * (abs(x) + abs(y)) / Scalar(std::numbers::sqrt2));
}

/// Contact term B e^{-k|x-y|/sqrt2}: depends only on the interparticle
/// distance, equals B on the coincidence line x = y.
template <class Scalar>
Scalar eval_correlation(Scalar k, Scalar amp, Scalar x, Scalar y) {
  using std::abs;
  using std::exp;
  using std::isfinite;
  if (!(isfinite(k) && isfinite(amp) && isfinite(x) && isfinite(y)))
    throw std::domain_error("eval_correlation: non-finite input");
  if (!(k > Scalar(0))) throw std::domain_error("eval_correlation: k must be > 0");
  return amp * exp(-k * abs(x - y) / Scalar(std::numbers::sqrt2));
}

/// Two-term trial wavefunction
///
///   psi(x, y) = A e^{-k(|x|+|y|)/sqrt2} + B e^{-k|x-y|/sqrt2}
///
/// with a shared decay constant k. B < 0 carves a correlation hole along
/// x = y; B = 0 is the uncorrelated product state.
struct AnsatzWavefunction {
  double amp_separable;    // A
  double amp_correlation;  // B
  double k;                // decay constant, 1/bohr

  AnsatzWavefunction(double amp_separable_, double amp_correlation_, double k_)
      : amp_separable(amp_separable_),
        amp_correlation(amp_correlation_),
        k(k_) {
    detail::require_finite(amp_separable, "AnsatzWavefunction: A");
    detail::require_finite(amp_correlation, "AnsatzWavefunction: B");
    detail::require_finite(k, "AnsatzWavefunction: k");
    if (!(k > 0.0)) throw std::domain_error("AnsatzWavefunction: k must be > 0");
    if (amp_separable == 0.0 && amp_correlation == 0.0)
      throw std::domain_error("AnsatzWavefunction: amplitudes must not both vanish");
  }
};

inline double eval_ansatz(const AnsatzWavefunction& w, double x, double y) {
  return eval_separable(w.k, w.amp_separable, x, y) +
         eval_correlation(w.k, w.amp_correlation, x, y);
}

/// Residuals of the four derivative-jump conditions the trial wavefunction
/// must satisfy, in atomic units with unit couplings:
///
///   [0]  -(1/2) [d psi/dx]_{x=y-}^{x=y+} + psi(y, y) = 0   probed at (y, y)
///   [1]  -(1/2) [d psi/dy]_{y=x-}^{y=x+} + psi(x, x) = 0   probed at (x, x)
///   [2]  -(1/2) [d psi/dx]_{x=0-}^{x=0+} - psi(0, y) = 0   probed at (0, y)
///   [3]  -(1/2) [d psi/dy]_{y=0-}^{y=0+} - psi(x, 0) = 0   probed at (x, 0)
///
/// The jumps are estimated with one-sided difference quotients of step
/// fd_step on either side of the kink, so the residuals of an exact solution
/// vanish only to O(fd_step). The first two conditions are position
/// dependent; a triple solved at separation s satisfies them at x = y = s.
/// The last two hold at every position once B/A takes its solved value.
inline std::array<double, 4> jump_residuals(const AnsatzWavefunction& w,
                                            double x, double y,
                                            double fd_step = 1e-6) {
  detail::require_finite(x, "jump_residuals: x");
  detail::require_finite(y, "jump_residuals: y");
  if (!(std::isfinite(fd_step) && fd_step > 0.0))
    throw std::domain_error("jump_residuals: fd_step must be > 0");
  if (x == 0.0 || y == 0.0)
    throw std::domain_error(
        "jump_residuals: x = 0 and y = 0 are degenerate evaluation points");
  if (fd_step >= 0.5 * std::min(std::abs(x), std::abs(y)))
    throw std::domain_error(
        "jump_residuals: fd_step must be small against |x| and |y|");

  // One-sided slopes across a kink at (px, py), probed along x or along y.
  const auto derivative_jump = [&](double px, double py, bool along_x) {
    const double dx = along_x ? fd_step : 0.0;
    const double dy = along_x ? 0.0 : fd_step;
    const double f_plus = eval_ansatz(w, px + dx, py + dy);
    const double f_mid = eval_ansatz(w, px, py);
    const double f_minus = eval_ansatz(w, px - dx, py - dy);
    return (f_plus - f_mid) / fd_step - (f_mid - f_minus) / fd_step;
  };

  return {
      -0.5 * derivative_jump(y, y, true) + eval_ansatz(w, y, y),
      -0.5 * derivative_jump(x, x, false) + eval_ansatz(w, x, x),
      -0.5 * derivative_jump(0.0, y, true) - eval_ansatz(w, 0.0, y),
      -0.5 * derivative_jump(x, 0.0, false) - eval_ansatz(w, x, 0.0),
  };
}

}  // namespace deltabound
