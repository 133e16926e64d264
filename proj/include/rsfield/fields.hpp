#pragma once

#include <array>
#include <vector>

#include "rsfield/amplitudes.hpp"
#include "rsfield/grid.hpp"

namespace rsfield {

/// A complex 3-vector field sampled on the grid, stored component-major:
/// component(c)[flat_index] with z fastest inside each component.
struct ComplexVectorField {
  std::array<std::vector<Complex>, 3> component;

  std::size_t point_count() const { return component[0].size(); }
  CVec3 at(std::size_t i) const { return {component[0][i], component[1][i], component[2][i]}; }
};

struct RealVectorField {
  std::array<std::vector<double>, 3> component;
};

/// Samples of F = E + iB on the grid at one instant: E is the real part,
/// B the imaginary part, both real vector fields.
struct FieldConfiguration {
  SpatialGrid grid;
  double time = 0.0;
  ComplexVectorField F;
};

/// Normalization of one mode in the field expansion: sqrt(2*pi*hbar*omega/V).
/// Fixed by requiring the classical energy of a single mode with amplitude a
/// to equal hbar*omega*|a|^2; the commutator kernels independently require the
/// same coefficient, and that redundancy is itself a library acceptance check.
double mode_normalization(double omega, double volume, const UnitSystem& units);

/// Spectral coefficients of the synthesized field: f_q such that
/// F(r) = sum_q f_q exp(i q.r), one coefficient per lattice mode. Each mode
/// contributes through its amplitude at +q and the conjugate amplitude at -q,
/// carrying exact phases exp(-i omega t) and exp(+i omega t) respectively.
std::vector<CVec3> spectral_coefficients(const ModeAmplitudes& modes, double t);

/// Time derivative of the spectral coefficients (per-part -i*omega / +i*omega).
std::vector<CVec3> spectral_coefficient_derivatives(const ModeAmplitudes& modes, double t);

/// Evaluate sum_q coeff_q e^{i q.r} on the grid (coefficients per lattice mode).
ComplexVectorField synthesize_from_coefficients(const std::vector<CVec3>& coeff,
                                                const ModeLattice& lattice,
                                                const SpatialGrid& grid);

/// Synthesize F = E + iB on the grid at time t. The phase convention,
/// fixed here and used by every other module:
///   E(r,t) = sum_{k,lambda} N_k [ i a_{k,lambda} e_lambda e^{i(k.r - w t)} + conj ],
///   B(r,t) = the same sum with e_lambda replaced by khat x e_lambda,
/// so F picks up the complex polarization e_lambda + i khat x e_lambda in both
/// the amplitude and conjugate-amplitude terms. Synthesis is additive in the
/// amplitudes and homogeneous under real rescaling (reality of E and B makes
/// the map only real-linear).
FieldConfiguration synthesize(const ModeAmplitudes& modes, const SpatialGrid& grid, double t);

/// dF/dt on the grid, from the exact per-mode phase derivatives. Independent
/// of the spectral curl path, so Maxwell residuals test a real identity.
ComplexVectorField synthesize_time_derivative(const ModeAmplitudes& modes,
                                              const SpatialGrid& grid, double t);

/// Finite-difference dF/dt cross-check route, step h = 1e-4 / omega_max.
ComplexVectorField time_derivative_finite_difference(const ModeAmplitudes& modes,
                                                     const SpatialGrid& grid, double t);

/// E = Re F, B = Im F. Recombining returns the input bit-exactly.
std::pair<RealVectorField, RealVectorField> to_EB(const FieldConfiguration& config);

/// Max-abs discrepancy between translating the synthesized field by `delta`
/// (an exact grid shift; delta must be an integer multiple of the spacing per
/// axis) and multiplying each mode amplitude by exp(i k.delta). This is the
/// statement that momentum generates spatial translations, at the level where
/// it is literally true for mode expansions.
double check_translation_generation(const ModeAmplitudes& modes, const SpatialGrid& grid,
                                    Vec3 delta);

/// max_q |q.F~(q)| / max_q |q||F~(q)| over the grid's spectral bins; the
/// transversality (divergence) defect of a configuration in spectral terms.
double spectral_divergence_rel(const FieldConfiguration& config);

double field_scale(const FieldConfiguration& config);  // max-abs over points/components

}  // namespace rsfield
