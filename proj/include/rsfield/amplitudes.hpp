#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rsfield/modes.hpp"

namespace rsfield {

/// One complex amplitude per (mode, polarization) pair of a ModeLattice.
/// Entries never stored are zero. Amplitudes are c-numbers; the synthesized
/// E and B are real by the synthesis formula, not by any constraint here.
class ModeAmplitudes {
 public:
  explicit ModeAmplitudes(ModeLatticePtr lattice);

  const ModeLattice& lattice() const { return *lattice_; }
  ModeLatticePtr lattice_ptr() const { return lattice_; }

  /// lambda is 1 or 2.
  Complex at(std::size_t mode_index, int lambda) const {
    return amp_[2 * mode_index + (lambda - 1)];
  }
  void set(std::size_t mode_index, int lambda, Complex value) {
    amp_[2 * mode_index + (lambda - 1)] = value;
  }

  ModeAmplitudes& operator+=(const ModeAmplitudes& other);
  friend ModeAmplitudes operator+(ModeAmplitudes a, const ModeAmplitudes& b) { return a += b; }
  ModeAmplitudes scaled(Complex factor) const;
  friend ModeAmplitudes operator*(double s, const ModeAmplitudes& m) {
    return m.scaled(Complex(s, 0.0));
  }

  double max_abs() const;

  /// Text format, one line per nonzero entry: "nx ny nz lambda re im"
  /// (three integers, the polarization index, and the two real numbers in
  /// scientific notation).
  void save(std::ostream& out) const;
  static ModeAmplitudes load(std::istream& in, ModeLatticePtr lattice);

 private:
  ModeLatticePtr lattice_;
  std::vector<Complex> amp_;  // index 2*mode + (lambda-1)
};

/// Single-mode state. The requested wavevector must lie on the lattice; the
/// error message names the nearest valid wavevector otherwise.
ModeAmplitudes plane_wave(ModeLatticePtr lattice, Vec3 k, int lambda, Complex amplitude);

/// Deterministic random state: `count` distinct (mode, polarization) entries
/// with amplitudes uniform on the unit disk. Used by the verification suites.
ModeAmplitudes random_amplitudes(ModeLatticePtr lattice, int count, std::uint64_t seed);

}  // namespace rsfield
