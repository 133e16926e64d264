#include "rsfield/maxwell.hpp"

#include <cmath>
#include <numbers>

#include "rsfield/reduction.hpp"

namespace rsfield {

namespace {
constexpr double kPi = std::numbers::pi;
}

EnergyMomentum energy_momentum(const FieldConfiguration& config, const UnitSystem& units) {
  const auto [E, B] = to_EB(config);
  const std::size_t n = config.grid.point_count();
  std::vector<double> u(n), px(n), py(n), pz(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 e{E.component[0][i], E.component[1][i], E.component[2][i]};
    const Vec3 b{B.component[0][i], B.component[1][i], B.component[2][i]};
    u[i] = dot(e, e) + dot(b, b);
    const Vec3 eb = cross(e, b);
    const Vec3 be = cross(b, e);
    px[i] = eb.x - be.x;
    py[i] = eb.y - be.y;
    pz[i] = eb.z - be.z;
  }
  const double dv = config.grid.cell_volume();
  EnergyMomentum result;
  result.H = pairwise_sum(u) * dv / (8.0 * kPi);
  const double p_factor = dv / (8.0 * kPi * units.c);
  result.P = {pairwise_sum(px) * p_factor, pairwise_sum(py) * p_factor,
              pairwise_sum(pz) * p_factor};
  return result;
}

double energy(const FieldConfiguration& config, const UnitSystem& units) {
  return energy_momentum(config, units).H;
}

Vec3 momentum(const FieldConfiguration& config, const UnitSystem& units) {
  return energy_momentum(config, units).P;
}

EnergyMomentum energy_momentum(const ModeAmplitudes& modes) {
  const ModeLattice& lattice = modes.lattice();
  const double hbar = lattice.units().hbar;
  std::vector<double> h(lattice.size()), px(lattice.size()), py(lattice.size()),
      pz(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const double occupancy = std::norm(modes.at(i, 1)) + std::norm(modes.at(i, 2));
    h[i] = hbar * lattice[i].omega * occupancy;
    px[i] = hbar * lattice[i].k.x * occupancy;
    py[i] = hbar * lattice[i].k.y * occupancy;
    pz[i] = hbar * lattice[i].k.z * occupancy;
  }
  EnergyMomentum result;
  result.H = pairwise_sum(h);
  result.P = {pairwise_sum(px), pairwise_sum(py), pairwise_sum(pz)};
  return result;
}

double energy(const ModeAmplitudes& modes) { return energy_momentum(modes).H; }

Vec3 momentum(const ModeAmplitudes& modes) { return energy_momentum(modes).P; }

ModeAmplitudes evolve(const ModeAmplitudes& modes, double dt) {
  const ModeLattice& lattice = modes.lattice();
  ModeAmplitudes out(modes.lattice_ptr());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Complex phase = std::polar(1.0, -lattice[i].omega * dt);
    out.set(i, 1, phase * modes.at(i, 1));
    out.set(i, 2, phase * modes.at(i, 2));
  }
  return out;
}

EnergyCrossTerm energy_cross_term(const ModeAmplitudes& m1, const ModeAmplitudes& m2,
                                  const SpatialGrid& grid, const UnitSystem& units) {
  EnergyCrossTerm result;
  result.H1 = energy(synthesize(m1, grid, 0.0), units);
  result.H2 = energy(synthesize(m2, grid, 0.0), units);
  result.H12 = energy(synthesize(m1 + m2, grid, 0.0), units);
  result.cross = result.H12 - result.H1 - result.H2;
  return result;
}

double bilinear_energy_overlap(const FieldConfiguration& f1, const FieldConfiguration& f2,
                               const UnitSystem&) {
  const auto [E1, B1] = to_EB(f1);
  const auto [E2, B2] = to_EB(f2);
  const std::size_t n = f1.grid.point_count();
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
      s += E1.component[c][i] * E2.component[c][i] + B1.component[c][i] * B2.component[c][i];
    }
    terms[i] = s;
  }
  return 2.0 * pairwise_sum(terms) * f1.grid.cell_volume() / (8.0 * kPi);
}

}  // namespace rsfield
