#pragma once

#include "rsfield/spectral.hpp"

namespace rsfield {

/// Total field energy and momentum on the box.
struct EnergyMomentum {
  double H = 0.0;
  Vec3 P;
};

/// Grid-quadrature route: H = (1/8pi) sum (E^2 + B^2) h^3 and the explicitly
/// symmetrized momentum integrand P = (1/8pi c) sum (ExB - BxE) h^3, written
/// out literally even though the two cross products are equal and opposite for
/// c-number fields (the symmetrized form is the operator-ordering-safe one).
EnergyMomentum energy_momentum(const FieldConfiguration& config, const UnitSystem& units);
double energy(const FieldConfiguration& config, const UnitSystem& units);
Vec3 momentum(const FieldConfiguration& config, const UnitSystem& units);

/// Mode-space route: H = sum hbar*omega*|a|^2, P = sum hbar*k*|a|^2. Agrees
/// with the grid route for band-limited states (Parseval).
EnergyMomentum energy_momentum(const ModeAmplitudes& modes);
double energy(const ModeAmplitudes& modes);
Vec3 momentum(const ModeAmplitudes& modes);

/// Exact time evolution: each amplitude rotated by exp(-i omega dt).
ModeAmplitudes evolve(const ModeAmplitudes& modes, double dt);

/// Energies of two states, of their superposition, and the bilinear cross
/// term cross = H(m1+m2) - H(m1) - H(m2), all by grid quadrature.
struct EnergyCrossTerm {
  double H1 = 0.0;
  double H2 = 0.0;
  double H12 = 0.0;
  double cross = 0.0;
};

EnergyCrossTerm energy_cross_term(const ModeAmplitudes& m1, const ModeAmplitudes& m2,
                                  const SpatialGrid& grid, const UnitSystem& units);

/// The bilinear overlap 2*(1/8pi) sum (E1.E2 + B1.B2) h^3 that the cross term
/// must reproduce.
double bilinear_energy_overlap(const FieldConfiguration& f1, const FieldConfiguration& f2,
                               const UnitSystem& units);

}  // namespace rsfield
