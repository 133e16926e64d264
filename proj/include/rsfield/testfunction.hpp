#pragma once

#include "rsfield/vec3.hpp"

namespace rsfield {

/// Normalized isotropic Gaussian smearing function (a finite-volume field
/// average in the Bohr-Rosenfeld sense). Every commutator evaluation in this
/// library is a smeared value; the pointwise kernels are distributions and are
/// never compared directly.
struct TestFunction {
  Vec3 center;
  double sigma = 0.0;
  double normalization = 0.0;  // (2 pi sigma^2)^{-3/2}, so the integral is 1

  TestFunction(Vec3 center_, double sigma_);

  double value(Vec3 r) const;

  /// Periodized value on a box of side L (27 nearest images; exact to far
  /// below roundoff for sigma <= L/10).
  double value_periodic(Vec3 r, double box_length) const;

  /// Fourier transform: f~(q) = integral f(r) e^{i q.r} = e^{i q.center} e^{-sigma^2 q^2 / 2};
  /// this is the magnitude factor.
  double fourier_damping(double q_squared) const;
};

/// Wrap a displacement into the centered box [-L/2, L/2)^3 (minimum image).
Vec3 minimum_image(Vec3 d, double box_length);

}  // namespace rsfield
