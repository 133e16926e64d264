#include "rsfield/modes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rsfield {

namespace {

// e1 = normalize(a x k), e2 = khat x e1. The reference axis a switches from
// z-hat to x-hat near the poles so the cross product never degenerates.
void polarization_basis(Vec3 k, Vec3& e1, Vec3& e2) {
  const Vec3 khat = normalized(k);
  const Vec3 zhat{0.0, 0.0, 1.0};
  const Vec3 xhat{1.0, 0.0, 0.0};
  const Vec3 a = std::abs(dot(khat, zhat)) > 0.9 ? xhat : zhat;
  e1 = normalized(cross(a, k));
  e2 = cross(khat, e1);
}

}  // namespace

std::shared_ptr<const ModeLattice> ModeLattice::build(const SpatialGrid& grid, double k_max,
                                                      const UnitSystem& units) {
  const double L = grid.box_length();
  const double k_unit = 2.0 * std::numbers::pi / L;
  if (k_max < k_unit) {
    std::ostringstream msg;
    msg << "ModeLattice: empty lattice, k_max = " << k_max
        << " is below the smallest nonzero wavenumber 2*pi/L = " << k_unit;
    throw std::invalid_argument(msg.str());
  }

  auto lattice = std::make_shared<ModeLattice>();
  lattice->box_length_ = L;
  lattice->k_max_ = k_max;
  lattice->k_unit_ = k_unit;
  lattice->units_ = units;

  const int n_max = static_cast<int>(std::floor(k_max / k_unit));
  const double k_max_sq = k_max * k_max;
  for (int nx = -n_max; nx <= n_max; ++nx) {
    for (int ny = -n_max; ny <= n_max; ++ny) {
      for (int nz = -n_max; nz <= n_max; ++nz) {
        if (nx == 0 && ny == 0 && nz == 0) continue;
        const Vec3 k{k_unit * nx, k_unit * ny, k_unit * nz};
        if (dot(k, k) > k_max_sq) continue;
        Mode mode;
        mode.n = {nx, ny, nz};
        mode.k = k;
        mode.omega = units.c * norm(k);
        polarization_basis(k, mode.e1, mode.e2);
        lattice->by_triple_[mode.n] = lattice->modes_.size();
        lattice->modes_.push_back(mode);
      }
    }
  }

  lattice->conjugate_.resize(lattice->modes_.size());
  for (std::size_t i = 0; i < lattice->modes_.size(); ++i) {
    const auto& n = lattice->modes_[i].n;
    const std::array<int, 3> neg{-n[0], -n[1], -n[2]};
    lattice->conjugate_[i] = lattice->by_triple_.at(neg);  // closure under k -> -k
  }
  return lattice;
}

std::optional<std::size_t> ModeLattice::index_of(const std::array<int, 3>& n) const {
  const auto it = by_triple_.find(n);
  if (it == by_triple_.end()) return std::nullopt;
  return it->second;
}

ModeLatticePtr build_mode_lattice(const SpatialGrid& grid, double k_max, const UnitSystem& units) {
  return ModeLattice::build(grid, k_max, units);
}

}  // namespace rsfield
