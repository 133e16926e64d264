#include "rsfield/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsfield {

FourierWorkspace::FourierWorkspace(const SpatialGrid& grid)
    : n_(grid.points_per_axis()),
      k_unit_(2.0 * std::numbers::pi / grid.box_length()),
      buffer_(grid.point_count()) {
  auto* data = reinterpret_cast<fftw_complex*>(buffer_.data());
  plan_forward_ = fftw_plan_dft_3d(n_, n_, n_, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_inverse_ = fftw_plan_dft_3d(n_, n_, n_, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (plan_forward_ == nullptr || plan_inverse_ == nullptr) {
    throw std::runtime_error("FourierWorkspace: FFT planning failed");
  }
}

FourierWorkspace::~FourierWorkspace() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inverse_));
}

void FourierWorkspace::forward(std::vector<Complex>& data) const {
  if (data.size() != buffer_.size()) {
    throw std::invalid_argument("FourierWorkspace: data size does not match the grid");
  }
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_forward_), raw, raw);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (Complex& v : data) v *= scale;
}

void FourierWorkspace::inverse(std::vector<Complex>& data) const {
  if (data.size() != buffer_.size()) {
    throw std::invalid_argument("FourierWorkspace: data size does not match the grid");
  }
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_inverse_), raw, raw);
}

Vec3 FourierWorkspace::bin_wavevector(std::size_t flat) const {
  const std::size_t n = static_cast<std::size_t>(n_);
  const int iz = static_cast<int>(flat % n);
  const int iy = static_cast<int>((flat / n) % n);
  const int ix = static_cast<int>(flat / (n * n));
  const auto freq = [this](int i) { return i <= n_ / 2 ? i : i - n_; };
  return {k_unit_ * freq(ix), k_unit_ * freq(iy), k_unit_ * freq(iz)};
}

ComplexVectorField curl(const FieldConfiguration& config) {
  FourierWorkspace fft(config.grid);
  std::array<std::vector<Complex>, 3> hat;
  for (int c = 0; c < 3; ++c) {
    hat[c] = config.F.component[c];
    fft.forward(hat[c]);
  }
  ComplexVectorField out;
  for (int c = 0; c < 3; ++c) out.component[c].resize(config.grid.point_count());
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < config.grid.point_count(); ++i) {
    const Vec3 q = fft.bin_wavevector(i);
    const CVec3 F{hat[0][i], hat[1][i], hat[2][i]};
    out.component[0][i] = I * (q.y * F.z - q.z * F.y);
    out.component[1][i] = I * (q.z * F.x - q.x * F.z);
    out.component[2][i] = I * (q.x * F.y - q.y * F.x);
  }
  for (int c = 0; c < 3; ++c) fft.inverse(out.component[c]);
  return out;
}

std::vector<Complex> divergence(const FieldConfiguration& config) {
  FourierWorkspace fft(config.grid);
  std::array<std::vector<Complex>, 3> hat;
  for (int c = 0; c < 3; ++c) {
    hat[c] = config.F.component[c];
    fft.forward(hat[c]);
  }
  std::vector<Complex> out(config.grid.point_count());
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vec3 q = fft.bin_wavevector(i);
    out[i] = I * (q.x * hat[0][i] + q.y * hat[1][i] + q.z * hat[2][i]);
  }
  fft.inverse(out);
  return out;
}

MaxwellResidual maxwell_residual(const FieldConfiguration& config,
                                 const ComplexVectorField& dF_dt, const UnitSystem& units) {
  const ComplexVectorField curl_F = curl(config);
  const std::vector<Complex> div_F = divergence(config);
  MaxwellResidual res;
  const Complex i_over_c(0.0, 1.0 / units.c);
  for (std::size_t i = 0; i < config.grid.point_count(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const Complex defect = curl_F.component[c][i] - i_over_c * dF_dt.component[c][i];
      res.curl_residual = std::max(res.curl_residual, std::abs(defect));
    }
    res.div_residual = std::max(res.div_residual, std::abs(div_F[i]));
  }
  return res;
}

}  // namespace rsfield
