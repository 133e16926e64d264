#pragma once

#include <cstdint>
#include <vector>

#include "rsfield/vec3.hpp"

namespace rsfield {

/// Levi-Civita symbol; indices are 1-based (1..3), out-of-range throws.
int levi_civita(int j, int k, int l);

/// Exhaustive check of sum_j eps_{jkl} eps_{jsu} = d_{ks} d_{lu} - d_{ku} d_{ls}
/// over all 81 (k,l,s,u). Integer arithmetic; returns the max absolute
/// deviation (0 when the identity holds).
int epsilon_contraction_identity_check();

/// sum_u (d_{uu} d_{ls'} - d_{us'} d_{lu}) evaluated for all (l, s'): the
/// contraction that forces the divergence of the field to satisfy
/// div F = 2 div F, hence div F = 0. Returns the diagonal proportionality
/// factor (2) and throws if any off-diagonal entry is nonzero.
double divergence_absurdity_factor();

/// A 3x3 real tensor sampled on a finite point set closed under rho -> -rho.
/// Point negation closure is validated on construction (bitwise).
class Tensor3x3Field {
 public:
  Tensor3x3Field(std::vector<Vec3> points, std::vector<Mat3> values);

  std::size_t size() const { return points_.size(); }
  const Vec3& point(std::size_t i) const { return points_[i]; }
  const Mat3& value(std::size_t i) const { return values_[i]; }
  std::size_t negation_index(std::size_t i) const { return negation_[i]; }

  double max_abs() const;

 private:
  std::vector<Vec3> points_;
  std::vector<Mat3> values_;
  std::vector<std::size_t> negation_;
};

/// The four projections of a kernel under (rho -> -rho) x (index exchange):
/// symmetric/antisymmetric (S/A) tensor parts crossed with even/odd (G/U)
/// point parts. The parts sum to the input exactly and each projector is
/// idempotent.
struct GUSADecomposition {
  Tensor3x3Field SG;
  Tensor3x3Field AG;
  Tensor3x3Field SU;
  Tensor3x3Field AU;
};

GUSADecomposition decompose_GU_SA(const Tensor3x3Field& field);

/// Read the vector v with A_{kl} = eps_{kls} v_s off an antisymmetric matrix.
/// Requires ||A + A^T|| <= 1e-12 ||A||.
Vec3 antisym_to_vector(const Mat3& A);

/// Inverse construction A_{kl} = eps_{kls} v_s.
Mat3 vector_to_antisym(Vec3 v);

/// Parity defect of a sampled kernel against intrinsic parity pi = -1
/// (pseudotensor): max |alpha_{kl}(rho) - pi * alpha_{kl}(-rho)|. Zero for
/// kernels of the form eps_{kls} v_s(rho) with odd v; 2|b| for the
/// (non-pseudotensor) constant symmetric input b*delta_{kl}.
double pseudotensor_parity_check(const Tensor3x3Field& field);

/// Deterministic +/- rho sample pairs inside a ball, for kernel audits.
std::vector<Vec3> make_sample_points(int pair_count, double radius, std::uint64_t seed);

}  // namespace rsfield
