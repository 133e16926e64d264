#pragma once

#include <cstddef>

#include "rsfield/vec3.hpp"

namespace rsfield {

/// Periodic cubic grid: N points per axis on a box of side L, spacing L/N.
/// Index arithmetic wraps modulo N on each axis. N must be even and >= 4 so
/// that point inversion maps grid points to grid points and the mode lattice
/// is symmetric under k -> -k.
class SpatialGrid {
 public:
  SpatialGrid(double box_length, int points_per_axis);

  double box_length() const { return box_length_; }
  int points_per_axis() const { return points_per_axis_; }
  double spacing() const { return box_length_ / points_per_axis_; }
  std::size_t point_count() const {
    const std::size_t n = static_cast<std::size_t>(points_per_axis_);
    return n * n * n;
  }
  double cell_volume() const { return spacing() * spacing() * spacing(); }
  double volume() const { return box_length_ * box_length_ * box_length_; }

  /// Largest representable wavenumber magnitude per axis (Nyquist limit).
  double nyquist() const;

  int wrap(int i) const {
    int m = i % points_per_axis_;
    return m < 0 ? m + points_per_axis_ : m;
  }

  double coordinate(int i) const { return wrap(i) * spacing(); }

  Vec3 point(int ix, int iy, int iz) const {
    return {coordinate(ix), coordinate(iy), coordinate(iz)};
  }

  /// Flat storage index; z runs fastest (matches the spectral transform layout).
  std::size_t flat_index(int ix, int iy, int iz) const {
    const std::size_t n = static_cast<std::size_t>(points_per_axis_);
    return (static_cast<std::size_t>(wrap(ix)) * n + wrap(iy)) * n + wrap(iz);
  }

  friend bool operator==(const SpatialGrid& a, const SpatialGrid& b) {
    return a.box_length_ == b.box_length_ && a.points_per_axis_ == b.points_per_axis_;
  }

 private:
  double box_length_;
  int points_per_axis_;
};

/// Validating constructor wrapper matching the library naming convention.
SpatialGrid build_grid(double box_length, int points_per_axis);

}  // namespace rsfield
