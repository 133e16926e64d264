#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace rsfield {

using Complex = std::complex<double>;

/// Plain 3-vector of doubles. Small enough to pass by value everywhere.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(Vec3 a) { return a / norm(a); }

/// Complex 3-vector (one field value, or one spectral coefficient).
struct CVec3 {
  Complex x{};
  Complex y{};
  Complex z{};

  Complex operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Complex& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend CVec3 operator+(const CVec3& a, const CVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend CVec3 operator-(const CVec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend CVec3 operator*(Complex s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend CVec3 operator*(double s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline CVec3 to_cvec(Vec3 a) { return {Complex(a.x, 0.0), Complex(a.y, 0.0), Complex(a.z, 0.0)}; }

/// 3x3 real matrix, row-major.
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat3C = std::array<std::array<Complex, 3>, 3>;

inline constexpr Mat3 zero_mat3() { return {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}; }

}  // namespace rsfield
