#include "rsfield/tensoralg.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rsfield/rng.hpp"

namespace rsfield {

int levi_civita(int j, int k, int l) {
  if (j < 1 || j > 3 || k < 1 || k > 3 || l < 1 || l > 3) {
    std::ostringstream msg;
    msg << "levi_civita: indices must be in 1..3, got (" << j << ", " << k << ", " << l << ")";
    throw std::out_of_range(msg.str());
  }
  if (j == k || k == l || j == l) return 0;
  // (j,k,l) is a permutation of (1,2,3); its sign:
  return (k - j) * (l - k) * (l - j) > 0 ? 1 : -1;
}

int epsilon_contraction_identity_check() {
  int max_dev = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      for (int s = 1; s <= 3; ++s) {
        for (int u = 1; u <= 3; ++u) {
          int lhs = 0;
          for (int j = 1; j <= 3; ++j) lhs += levi_civita(j, k, l) * levi_civita(j, s, u);
          const int rhs = (k == s ? 1 : 0) * (l == u ? 1 : 0) - (k == u ? 1 : 0) * (l == s ? 1 : 0);
          max_dev = std::max(max_dev, std::abs(lhs - rhs));
        }
      }
    }
  }
  return max_dev;
}

double divergence_absurdity_factor() {
  const auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  int diagonal = 0;
  bool diagonal_set = false;
  for (int l = 1; l <= 3; ++l) {
    for (int s = 1; s <= 3; ++s) {
      int value = 0;
      for (int u = 1; u <= 3; ++u) {
        value += delta(u, u) * delta(l, s) - delta(u, s) * delta(l, u);
      }
      if (l == s) {
        if (diagonal_set && value != diagonal) {
          throw std::logic_error("divergence_absurdity_factor: diagonal entries differ");
        }
        diagonal = value;
        diagonal_set = true;
      } else if (value != 0) {
        throw std::logic_error("divergence_absurdity_factor: off-diagonal entry is nonzero");
      }
    }
  }
  return static_cast<double>(diagonal);
}

namespace {

std::array<std::uint64_t, 3> bit_pattern(Vec3 v) {
  std::array<std::uint64_t, 3> bits{};
  std::memcpy(&bits[0], &v.x, sizeof(double));
  std::memcpy(&bits[1], &v.y, sizeof(double));
  std::memcpy(&bits[2], &v.z, sizeof(double));
  return bits;
}

}  // namespace

Tensor3x3Field::Tensor3x3Field(std::vector<Vec3> points, std::vector<Mat3> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() != values_.size()) {
    throw std::invalid_argument("Tensor3x3Field: point and value counts differ");
  }
  std::map<std::array<std::uint64_t, 3>, std::size_t> index;
  for (std::size_t i = 0; i < points_.size(); ++i) index[bit_pattern(points_[i])] = i;
  negation_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto it = index.find(bit_pattern(-points_[i]));
    if (it == index.end()) {
      std::ostringstream msg;
      msg << "Tensor3x3Field: sample point set is not closed under negation (missing -rho for "
             "rho = ("
          << points_[i].x << ", " << points_[i].y << ", " << points_[i].z << "))";
      throw std::invalid_argument(msg.str());
    }
    negation_[i] = it->second;
  }
}

double Tensor3x3Field::max_abs() const {
  double m = 0.0;
  for (const Mat3& v : values_) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) m = std::max(m, std::abs(v[k][l]));
    }
  }
  return m;
}

GUSADecomposition decompose_GU_SA(const Tensor3x3Field& field) {
  std::vector<Mat3> sg(field.size()), ag(field.size()), su(field.size()), au(field.size());
  std::vector<Vec3> points(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    points[i] = field.point(i);
    const Mat3& here = field.value(i);
    const Mat3& there = field.value(field.negation_index(i));
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        const double s_here = 0.5 * (here[k][l] + here[l][k]);
        const double a_here = 0.5 * (here[k][l] - here[l][k]);
        const double s_there = 0.5 * (there[k][l] + there[l][k]);
        const double a_there = 0.5 * (there[k][l] - there[l][k]);
        sg[i][k][l] = 0.5 * (s_here + s_there);
        su[i][k][l] = 0.5 * (s_here - s_there);
        ag[i][k][l] = 0.5 * (a_here + a_there);
        au[i][k][l] = 0.5 * (a_here - a_there);
      }
    }
  }
  return {Tensor3x3Field(points, sg), Tensor3x3Field(points, ag), Tensor3x3Field(points, su),
          Tensor3x3Field(points, au)};
}

Vec3 antisym_to_vector(const Mat3& A) {
  double norm_a = 0.0;
  double norm_sym = 0.0;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      norm_a = std::max(norm_a, std::abs(A[k][l]));
      norm_sym = std::max(norm_sym, std::abs(A[k][l] + A[l][k]));
    }
  }
  if (norm_sym > 1e-12 * norm_a) {
    throw std::invalid_argument("antisym_to_vector: input matrix is not antisymmetric");
  }
  // A_{kl} = eps_{kls} v_s  =>  v_1 = A_23, v_2 = A_31, v_3 = A_12.
  return {A[1][2], A[2][0], A[0][1]};
}

Mat3 vector_to_antisym(Vec3 v) {
  Mat3 A = zero_mat3();
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      for (int s = 0; s < 3; ++s) {
        A[k][l] += levi_civita(k + 1, l + 1, s + 1) * v[s];
      }
    }
  }
  return A;
}

double pseudotensor_parity_check(const Tensor3x3Field& field) {
  constexpr double pi_parity = -1.0;
  double defect = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    const Mat3& here = field.value(i);
    const Mat3& there = field.value(field.negation_index(i));
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        defect = std::max(defect, std::abs(here[k][l] - pi_parity * there[k][l]));
      }
    }
  }
  return defect;
}

std::vector<Vec3> make_sample_points(int pair_count, double radius, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec3> points;
  points.reserve(2 * static_cast<std::size_t>(pair_count));
  for (int i = 0; i < pair_count; ++i) {
    Vec3 rho = rng.in_ball(radius);
    if (norm(rho) < 0.05 * radius) rho = rho + Vec3{0.1 * radius, 0.0, 0.0};
    points.push_back(rho);
    points.push_back(-rho);
  }
  return points;
}

}  // namespace rsfield
