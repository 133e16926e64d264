#include "rsfield/grid.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rsfield {

SpatialGrid::SpatialGrid(double box_length, int points_per_axis)
    : box_length_(box_length), points_per_axis_(points_per_axis) {
  if (!(box_length > 0.0)) {
    std::ostringstream msg;
    msg << "SpatialGrid: box length must be positive, got " << box_length;
    throw std::invalid_argument(msg.str());
  }
  if (points_per_axis < 4) {
    std::ostringstream msg;
    msg << "SpatialGrid: need at least 4 points per axis, got " << points_per_axis;
    throw std::invalid_argument(msg.str());
  }
  if (points_per_axis % 2 != 0) {
    std::ostringstream msg;
    msg << "SpatialGrid: points per axis must be even (point inversion must map the "
           "grid onto itself), got "
        << points_per_axis;
    throw std::invalid_argument(msg.str());
  }
}

double SpatialGrid::nyquist() const {
  return std::numbers::pi * points_per_axis_ / box_length_;
}

SpatialGrid build_grid(double box_length, int points_per_axis) {
  return SpatialGrid(box_length, points_per_axis);
}

}  // namespace rsfield
