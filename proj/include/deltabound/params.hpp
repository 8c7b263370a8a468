#pragma once

#include <cmath>
#include <stdexcept>

namespace deltabound {

/// Physical constants of the two-electron double-delta-well Hamiltonian
///
///   H = -(hbar^2/2m) (d^2/dx^2 + d^2/dy^2) - alpha d(x) - alpha d(y)
///       + lambda d(x-y)
///
/// with x, y the electron coordinates. Defaults are atomic units with unit
/// couplings: the fully correlated case. lambda = 0 switches the contact
/// repulsion off entirely.
struct PhysicalParams {
  double hbar = 1.0;    // action
  double mass = 1.0;    // electron mass
  double alpha = 1.0;   // well strength, hartree*bohr
  double lambda = 1.0;  // contact repulsion strength, hartree*bohr

  static PhysicalParams atomic_units() { return {}; }

  void validate() const {
    if (!(std::isfinite(hbar) && hbar > 0.0))
      throw std::domain_error("PhysicalParams: hbar must be finite and > 0");
    if (!(std::isfinite(mass) && mass > 0.0))
      throw std::domain_error("PhysicalParams: mass must be finite and > 0");
    if (!(std::isfinite(alpha) && alpha > 0.0))
      throw std::domain_error("PhysicalParams: alpha must be finite and > 0");
    if (!(std::isfinite(lambda) && lambda >= 0.0))
      throw std::domain_error("PhysicalParams: lambda must be finite and >= 0");
  }
};

}  // namespace deltabound
