#pragma once

#include <cstdint>
#include <random>

#include "rsfield/vec3.hpp"

namespace rsfield {

/// Deterministic random stream. The uint64 -> double mapping is spelled out
/// instead of going through std distributions, whose sequences are not pinned
/// by the standard; identical seeds give identical values on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  Complex unit_disk() {
    // rejection sampling; deterministic given the seed
    for (;;) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {re, im};
    }
  }

  Vec3 in_ball(double radius) {
    for (;;) {
      const Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
      if (dot(v, v) <= 1.0) return radius * v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rsfield
