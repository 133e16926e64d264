#pragma once

#include <vector>

#include "rsfield/fields.hpp"

namespace rsfield {

/// Discrete transform conventions, fixed once for the whole project:
/// forward transform carries e^{-i q.r} and the 1/N^3 normalization, so the
/// forward coefficients of a band-limited field are its analytic expansion
/// coefficients; the inverse carries e^{+i q.r} unnormalized.
inline constexpr int kForwardPhaseSign = -1;
inline constexpr bool kForwardNormalized = true;

/// 3D complex transforms on the grid (FFTW behind the scenes). Plans are
/// created per instance; instances are cheap for the grid sizes used here.
class FourierWorkspace {
 public:
  explicit FourierWorkspace(const SpatialGrid& grid);
  ~FourierWorkspace();
  FourierWorkspace(const FourierWorkspace&) = delete;
  FourierWorkspace& operator=(const FourierWorkspace&) = delete;

  /// In-place forward transform (applies the 1/N^3 normalization).
  void forward(std::vector<Complex>& data) const;
  /// In-place inverse transform (no normalization).
  void inverse(std::vector<Complex>& data) const;

  /// Wavevector of a flat spectral bin under the index mapping
  /// m = n <= N/2 ? n : n - N per axis.
  Vec3 bin_wavevector(std::size_t flat) const;

  int points_per_axis() const { return n_; }

 private:
  int n_;
  double k_unit_;
  void* plan_forward_;
  void* plan_inverse_;
  mutable std::vector<Complex> buffer_;
};

/// Exact spectral curl: multiplication by i k x (.) in mode space.
ComplexVectorField curl(const FieldConfiguration& config);

/// Exact spectral divergence: i k . (.) in mode space.
std::vector<Complex> divergence(const FieldConfiguration& config);

/// Residuals of the free-field evolution equations:
///   curl_residual = max | (curl F)_j - (i/c) dF_j/dt |
///   div_residual  = max | div F |
struct MaxwellResidual {
  double curl_residual = 0.0;
  double div_residual = 0.0;
};

MaxwellResidual maxwell_residual(const FieldConfiguration& config,
                                 const ComplexVectorField& dF_dt, const UnitSystem& units);

}  // namespace rsfield
