#include "rsfield/testfunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsfield {

TestFunction::TestFunction(Vec3 center_, double sigma_) : center(center_), sigma(sigma_) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("TestFunction: sigma must be positive");
  }
  normalization = std::pow(2.0 * std::numbers::pi * sigma * sigma, -1.5);
}

double TestFunction::value(Vec3 r) const {
  const Vec3 u = r - center;
  return normalization * std::exp(-dot(u, u) / (2.0 * sigma * sigma));
}

double TestFunction::value_periodic(Vec3 r, double box_length) const {
  const Vec3 u = minimum_image(r - center, box_length);
  double sum = 0.0;
  for (int nx = -1; nx <= 1; ++nx) {
    for (int ny = -1; ny <= 1; ++ny) {
      for (int nz = -1; nz <= 1; ++nz) {
        const Vec3 v = u + box_length * Vec3{static_cast<double>(nx), static_cast<double>(ny),
                                             static_cast<double>(nz)};
        sum += std::exp(-dot(v, v) / (2.0 * sigma * sigma));
      }
    }
  }
  return normalization * sum;
}

double TestFunction::fourier_damping(double q_squared) const {
  return std::exp(-0.5 * sigma * sigma * q_squared);
}

Vec3 minimum_image(Vec3 d, double box_length) {
  const auto wrap = [box_length](double x) {
    return x - box_length * std::round(x / box_length);
  };
  return {wrap(d.x), wrap(d.y), wrap(d.z)};
}

}  // namespace rsfield
