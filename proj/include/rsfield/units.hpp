#pragma once

#include <stdexcept>

namespace rsfield {

/// Values of hbar and c fixing every physical prefactor in the library.
/// Defaults to natural units; both are overridable so prefactor-scaling
/// properties (kernel values linear in hbar, explicit powers of c) can be
/// exercised by the test suites.
struct UnitSystem {
  double hbar = 1.0;
  double c = 1.0;

  UnitSystem() = default;
  UnitSystem(double hbar_, double c_) : hbar(hbar_), c(c_) {
    if (!(hbar > 0.0) || !(c > 0.0)) {
      throw std::invalid_argument("UnitSystem: hbar and c must be positive");
    }
  }
};

}  // namespace rsfield
