#pragma once

#include <span>
#include <string>

#include "rsfield/spectral.hpp"

namespace rsfield {

/// An element of the discrete symmetry group generated by parity P, time
/// reversal T, charge conjugation C and the duality rotation D, acting on
/// field configurations as
///   P: F(r,t) -> -conj(F)(-r,t)      T: F(r,t) -> conj(F)(r,-t)
///   C: F(r,t) -> -F(r,t)             D: F(r,t) -> i F(r,t)
/// (T is the classical table entry; the operator version of time reversal is
/// anti-unitary and cannot act on c-number configurations. Its content here is
/// the reality constraint on the commutator kernel, which the commutators
/// module tests directly.)
///
/// Elements are kept in the normal form D^d P^p T^t with d in 0..3 and
/// p, t in {0,1}. P and T commute; conjugating D by either inverts it
/// (P D = D^3 P), and C = D^2 is central.
class TransformOp {
 public:
  TransformOp() = default;  // identity

  static TransformOp identity() { return {}; }
  static TransformOp parity() { return TransformOp(0, 1, 0); }
  static TransformOp time_reversal() { return TransformOp(0, 0, 1); }
  static TransformOp charge_conjugation() { return TransformOp(2, 0, 0); }
  static TransformOp dual() { return TransformOp(1, 0, 0); }

  /// this o other: `other` acts first.
  TransformOp then_after(const TransformOp& other) const {
    const int flip = (p_ + t_) % 2 == 1 ? -1 : 1;
    return TransformOp(((d_ + flip * other.d_) % 4 + 4) % 4, p_ ^ other.p_, t_ ^ other.t_);
  }

  friend bool operator==(const TransformOp&, const TransformOp&) = default;

  bool inverts_space() const { return p_ == 1; }
  bool inverts_time() const { return t_ == 1; }
  bool conjugates() const { return (p_ + t_) % 2 == 1; }
  /// Power m of the exact unit factor i^m applied after conjugation.
  int unit_power() const { return (d_ + 2 * p_) % 4; }

  std::string name() const;

 private:
  TransformOp(int d, int p, int t) : d_(d), p_(p), t_(t) {}
  int d_ = 0;
  int p_ = 0;
  int t_ = 0;
};

/// Composition of a sequence, applied right to left:
/// apply(compose({A, B}), f) == apply(A, apply(B, f)).
TransformOp compose(std::span<const TransformOp> ops);
TransformOp compose(std::initializer_list<TransformOp> ops);

/// Apply the transform to a configuration. All arithmetic is exact (grid index
/// remapping, conjugation, multiplication by a power of i done by component
/// swaps), so the group relations hold bitwise.
FieldConfiguration apply(const TransformOp& op, const FieldConfiguration& config);

/// The matching action on a time-derivative field: the same spatial map,
/// conjugation and unit factor, with one extra sign when the transform
/// reverses time.
ComplexVectorField apply_to_time_derivative(const TransformOp& op, const ComplexVectorField& dF_dt,
                                            const SpatialGrid& grid);

/// Maxwell residuals before and after transforming (config, dF_dt) consistently.
std::pair<MaxwellResidual, MaxwellResidual> invariance_report(const FieldConfiguration& config,
                                                              const ComplexVectorField& dF_dt,
                                                              const TransformOp& op,
                                                              const UnitSystem& units);

}  // namespace rsfield
