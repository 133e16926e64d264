#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rsfield/grid.hpp"
#include "rsfield/units.hpp"
#include "rsfield/vec3.hpp"

namespace rsfield {

/// One transverse plane-wave mode of the periodic box: wavevector k = (2pi/L) n,
/// frequency omega = c|k|, and a right-handed transverse triad (e1, e2, k/|k|).
struct Mode {
  std::array<int, 3> n{};  // integer wavevector triple
  Vec3 k;
  double omega = 0.0;
  Vec3 e1;
  Vec3 e2;

  Vec3 khat() const { return k / std::sqrt(dot(k, k)); }
};

/// The finite set of nonzero wavevectors with |k| <= k_max on the box, each
/// carrying two transverse polarizations. Construction is deterministic:
/// integer triples are visited in lexicographic order and the polarization
/// basis is
///   e1 = normalize(a x k),  a = z-hat unless |k-hat . z-hat| > 0.9 (then x-hat),
///   e2 = k-hat x e1,
/// which is well conditioned for every lattice direction and right-handed by
/// construction. The zero mode is excluded: no transverse mode exists at k = 0.
class ModeLattice {
 public:
  static std::shared_ptr<const ModeLattice> build(const SpatialGrid& grid, double k_max,
                                                  const UnitSystem& units);

  std::size_t size() const { return modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_[i]; }
  const std::vector<Mode>& modes() const { return modes_; }

  double box_length() const { return box_length_; }
  double volume() const { return box_length_ * box_length_ * box_length_; }
  double k_max() const { return k_max_; }
  double k_unit() const { return k_unit_; }  // 2pi/L
  const UnitSystem& units() const { return units_; }

  std::optional<std::size_t> index_of(const std::array<int, 3>& n) const;

  /// Index of the mode at -k; total involution over the lattice.
  std::size_t conjugate_index(std::size_t i) const { return conjugate_[i]; }

 private:
  std::vector<Mode> modes_;
  std::map<std::array<int, 3>, std::size_t> by_triple_;
  std::vector<std::size_t> conjugate_;
  double box_length_ = 0.0;
  double k_max_ = 0.0;
  double k_unit_ = 0.0;
  UnitSystem units_;
};

using ModeLatticePtr = std::shared_ptr<const ModeLattice>;

ModeLatticePtr build_mode_lattice(const SpatialGrid& grid, double k_max,
                                  const UnitSystem& units = UnitSystem());

}  // namespace rsfield
