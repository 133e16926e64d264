#pragma once

#include <array>

#include "rsfield/modes.hpp"
#include "rsfield/testfunction.hpp"

namespace rsfield {

/// Which commutator is being evaluated; the first field carries (r', t').
enum class FieldPair { F_F, Fd_Fd, Fd_F, E_E, B_B, E_B };

const char* to_string(FieldPair pair);

/// One smeared commutator matrix evaluated by summing per-mode coefficient
/// products over the lattice. Fields are linear in the mode operators, so the
/// commutator is the closed-form c-number sum
///   sum_{q,lambda} N_q^2  u1_{lambda,k}(q) u2_{lambda,l}(q)
///                  * 2 i sin(q.d - omega_q tau) * e^{-S2 q^2 / 2}
/// with u the per-field polarization factor (e_lambda for E, khat x e_lambda
/// for B, e +- i khat x e for F and Fdag), d the smeared center separation and
/// S2 the summed test-function variances. Unequal times enter as exact phase
/// rotations of the coefficients; no operator representation is needed.
///
/// `scale` accumulates sum |terms| (with |sin| <= 1), the natural yardstick
/// for cancellation-driven zeros; `cutoff` records the lattice k_max.
struct ModesumMatrix {
  std::array<std::array<Complex, 3>, 3> value{};
  double scale = 0.0;
  double cutoff = 0.0;

  Complex at(int k, int l) const { return value[k - 1][l - 1]; }
};

ModesumMatrix modesum_commutator_matrix(const ModeLattice& lattice, FieldPair pair,
                                        Vec3 separation, double tau, double sigma2_sum);

/// Coefficient of e^{i q.rho} in the expansion of the equal-time [Fdag_k, F_l]
/// kernel over the lattice (q is the wavevector of `mode_index`):
///   A_{kl}(q) = N_q^2 ( C_{kl}(q) - C_{kl}(-q) ),
/// assembled from the stored triads at the mode and its conjugate; equals
/// 4 i N_q^2 eps_{klm} qhat_m analytically. The building block of the
/// kernel-convolution (M tensor, generator identity) checks.
Mat3C fdagf_kernel_coefficient(const ModeLattice& lattice, std::size_t mode_index);

/// Lattice-regularized smeared Pauli-Jordan value: the scalar sum
///   -(1/V) sum_q sin(omega_q tau)/|q| e^{-sigma^2 q^2/2} cos(q.center)
/// over the reciprocal lattice, plus the finite q = 0 limit (-c tau / V),
/// which the transverse mode lattice omits but the scalar kernel requires.
double pauli_jordan_modesum(const ModeLattice& lattice, const TestFunction& g, double tau);

}  // namespace rsfield
