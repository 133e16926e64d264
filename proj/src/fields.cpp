#include "rsfield/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rsfield/spectral.hpp"

namespace rsfield {

double mode_normalization(double omega, double volume, const UnitSystem& units) {
  return std::sqrt(2.0 * std::numbers::pi * units.hbar * omega / volume);
}

namespace {

// Per-mode contribution to the coefficient of e^{i q.r}:
//   amplitude part (at +q):  i N_q e^{-i w t} sum_lambda a_lambda eps_lambda(+q)
//   conjugate part (from -q): -i N_q e^{+i w t} sum_lambda conj(a'_lambda) eps_lambda(-q)
// where eps_lambda(p) = e_lambda(p) + i phat x e_lambda(p) and a' lives on -q.
void accumulate_coefficient(const ModeLattice& lattice, const ModeAmplitudes& modes, double t,
                            std::size_t i, bool time_derivative, CVec3& out) {
  const Mode& mode = lattice[i];
  const Mode& conj_mode = lattice[lattice.conjugate_index(i)];
  const double N = mode_normalization(mode.omega, lattice.volume(), lattice.units());
  const Complex phase = std::polar(1.0, -mode.omega * t);

  const Vec3 khat = mode.khat();
  const Vec3 b1 = cross(khat, mode.e1);
  const Vec3 b2 = cross(khat, mode.e2);
  const Vec3 chat = conj_mode.khat();
  const Vec3 cb1 = cross(chat, conj_mode.e1);
  const Vec3 cb2 = cross(chat, conj_mode.e2);

  Complex amp_term[3], conj_term[3];
  const Complex a1 = modes.at(i, 1);
  const Complex a2 = modes.at(i, 2);
  const Complex c1 = std::conj(modes.at(lattice.conjugate_index(i), 1));
  const Complex c2 = std::conj(modes.at(lattice.conjugate_index(i), 2));
  for (int c = 0; c < 3; ++c) {
    const Complex eps1(mode.e1[c], b1[c]);
    const Complex eps2(mode.e2[c], b2[c]);
    amp_term[c] = a1 * eps1 + a2 * eps2;
    const Complex ceps1(conj_mode.e1[c], cb1[c]);
    const Complex ceps2(conj_mode.e2[c], cb2[c]);
    conj_term[c] = c1 * ceps1 + c2 * ceps2;
  }

  const Complex iN(0.0, N);
  Complex w_amp = iN * phase;
  Complex w_conj = -iN * std::conj(phase);
  if (time_derivative) {
    w_amp *= Complex(0.0, -mode.omega);
    w_conj *= Complex(0.0, mode.omega);
  }
  for (int c = 0; c < 3; ++c) {
    out[c] += w_amp * amp_term[c] + w_conj * conj_term[c];
  }
}

std::vector<CVec3> coefficients_impl(const ModeAmplitudes& modes, double t, bool derivative) {
  const ModeLattice& lattice = modes.lattice();
  std::vector<CVec3> coeff(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    accumulate_coefficient(lattice, modes, t, i, derivative, coeff[i]);
  }
  return coeff;
}

void require_compatible(const ModeLattice& lattice, const SpatialGrid& grid) {
  if (lattice.box_length() != grid.box_length()) {
    throw std::invalid_argument("synthesize: lattice and grid box lengths differ");
  }
  if (lattice.k_max() >= grid.nyquist()) {
    std::ostringstream msg;
    msg << "synthesize: lattice k_max = " << lattice.k_max()
        << " reaches the grid Nyquist limit pi*N/L = " << grid.nyquist()
        << "; the synthesized field would alias";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

ComplexVectorField synthesize_from_coefficients(const std::vector<CVec3>& coeff,
                                                const ModeLattice& lattice,
                                                const SpatialGrid& grid) {
  require_compatible(lattice, grid);
  const int N = grid.points_per_axis();
  ComplexVectorField field;
  FourierWorkspace fft(grid);
  for (int c = 0; c < 3; ++c) {
    std::vector<Complex> bins(grid.point_count(), Complex{});
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& n = lattice[i].n;
      const int bx = n[0] >= 0 ? n[0] : n[0] + N;
      const int by = n[1] >= 0 ? n[1] : n[1] + N;
      const int bz = n[2] >= 0 ? n[2] : n[2] + N;
      bins[grid.flat_index(bx, by, bz)] = coeff[i][c];
    }
    fft.inverse(bins);
    field.component[c] = std::move(bins);
  }
  return field;
}

std::vector<CVec3> spectral_coefficients(const ModeAmplitudes& modes, double t) {
  return coefficients_impl(modes, t, false);
}

std::vector<CVec3> spectral_coefficient_derivatives(const ModeAmplitudes& modes, double t) {
  return coefficients_impl(modes, t, true);
}

FieldConfiguration synthesize(const ModeAmplitudes& modes, const SpatialGrid& grid, double t) {
  require_compatible(modes.lattice(), grid);
  FieldConfiguration config{grid, t, {}};
  config.F = synthesize_from_coefficients(spectral_coefficients(modes, t), modes.lattice(), grid);
  return config;
}

ComplexVectorField synthesize_time_derivative(const ModeAmplitudes& modes,
                                              const SpatialGrid& grid, double t) {
  require_compatible(modes.lattice(), grid);
  return synthesize_from_coefficients(spectral_coefficient_derivatives(modes, t), modes.lattice(),
                                      grid);
}

ComplexVectorField time_derivative_finite_difference(const ModeAmplitudes& modes,
                                                     const SpatialGrid& grid, double t) {
  const ModeLattice& lattice = modes.lattice();
  const double omega_max = lattice.units().c * lattice.k_max();
  const double h = 1e-4 / omega_max;
  const FieldConfiguration plus = synthesize(modes, grid, t + h);
  const FieldConfiguration minus = synthesize(modes, grid, t - h);
  ComplexVectorField out;
  for (int c = 0; c < 3; ++c) {
    out.component[c].resize(grid.point_count());
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
      out.component[c][i] = (plus.F.component[c][i] - minus.F.component[c][i]) / (2.0 * h);
    }
  }
  return out;
}

std::pair<RealVectorField, RealVectorField> to_EB(const FieldConfiguration& config) {
  RealVectorField E, B;
  for (int c = 0; c < 3; ++c) {
    const auto& F = config.F.component[c];
    E.component[c].resize(F.size());
    B.component[c].resize(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
      E.component[c][i] = F[i].real();
      B.component[c][i] = F[i].imag();
    }
  }
  return {std::move(E), std::move(B)};
}

double check_translation_generation(const ModeAmplitudes& modes, const SpatialGrid& grid,
                                    Vec3 delta) {
  const double h = grid.spacing();
  int shift[3];
  for (int axis = 0; axis < 3; ++axis) {
    const double steps = delta[axis] / h;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9) {
      std::ostringstream msg;
      msg << "check_translation_generation: delta component " << delta[axis]
          << " is not an integer multiple of the grid spacing " << h
          << " (no interpolation is performed)";
      throw std::invalid_argument(msg.str());
    }
    shift[axis] = static_cast<int>(rounded);
  }

  const FieldConfiguration base = synthesize(modes, grid, 0.0);

  // Phase route: a_{k,lambda} -> exp(i k.delta) a_{k,lambda}.
  const ModeLattice& lattice = modes.lattice();
  ModeAmplitudes shifted(modes.lattice_ptr());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Complex phase = std::polar(1.0, dot(lattice[i].k, delta));
    shifted.set(i, 1, phase * modes.at(i, 1));
    shifted.set(i, 2, phase * modes.at(i, 2));
  }
  const FieldConfiguration phased = synthesize(shifted, grid, 0.0);

  const int N = grid.points_per_axis();
  double max_disc = 0.0;
  for (int ix = 0; ix < N; ++ix) {
    for (int iy = 0; iy < N; ++iy) {
      for (int iz = 0; iz < N; ++iz) {
        const std::size_t here = grid.flat_index(ix, iy, iz);
        const std::size_t there = grid.flat_index(ix + shift[0], iy + shift[1], iz + shift[2]);
        for (int c = 0; c < 3; ++c) {
          const Complex translated = base.F.component[c][there];
          max_disc = std::max(max_disc, std::abs(translated - phased.F.component[c][here]));
        }
      }
    }
  }
  return max_disc;
}

double spectral_divergence_rel(const FieldConfiguration& config) {
  FourierWorkspace fft(config.grid);
  std::array<std::vector<Complex>, 3> hat;
  for (int c = 0; c < 3; ++c) {
    hat[c] = config.F.component[c];
    fft.forward(hat[c]);
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < config.grid.point_count(); ++i) {
    const Vec3 q = fft.bin_wavevector(i);
    const Complex div = q.x * hat[0][i] + q.y * hat[1][i] + q.z * hat[2][i];
    const double mag =
        std::sqrt(std::norm(hat[0][i]) + std::norm(hat[1][i]) + std::norm(hat[2][i]));
    num = std::max(num, std::abs(div));
    den = std::max(den, norm(q) * mag);
  }
  return den > 0.0 ? num / den : 0.0;
}

double field_scale(const FieldConfiguration& config) {
  double scale = 0.0;
  for (int c = 0; c < 3; ++c) {
    for (const Complex& v : config.F.component[c]) scale = std::max(scale, std::abs(v));
  }
  return scale;
}

}  // namespace rsfield
