#include "rsfield/modesum.hpp"

#include <cmath>
#include <vector>

#include "rsfield/fields.hpp"
#include "rsfield/reduction.hpp"

namespace rsfield {

const char* to_string(FieldPair pair) {
  switch (pair) {
    case FieldPair::F_F: return "F_F";
    case FieldPair::Fd_Fd: return "Fd_Fd";
    case FieldPair::Fd_F: return "Fd_F";
    case FieldPair::E_E: return "E_E";
    case FieldPair::B_B: return "B_B";
    case FieldPair::E_B: return "E_B";
  }
  return "?";
}

namespace {

enum class FieldKind { E, B, F, Fdag };

std::pair<FieldKind, FieldKind> split_pair(FieldPair pair) {
  switch (pair) {
    case FieldPair::F_F: return {FieldKind::F, FieldKind::F};
    case FieldPair::Fd_Fd: return {FieldKind::Fdag, FieldKind::Fdag};
    case FieldPair::Fd_F: return {FieldKind::Fdag, FieldKind::F};
    case FieldPair::E_E: return {FieldKind::E, FieldKind::E};
    case FieldPair::B_B: return {FieldKind::B, FieldKind::B};
    case FieldPair::E_B: return {FieldKind::E, FieldKind::B};
  }
  return {FieldKind::E, FieldKind::E};
}

// Polarization factor of one field for one (mode, lambda); assembled from the
// stored triad, not from projector identities, so cancellations happen in the
// sum the way they do in the physics.
CVec3 polarization_factor(FieldKind kind, const Mode& mode, int lambda) {
  const Vec3 e = lambda == 1 ? mode.e1 : mode.e2;
  const Vec3 b = cross(mode.khat(), e);
  switch (kind) {
    case FieldKind::E: return to_cvec(e);
    case FieldKind::B: return to_cvec(b);
    case FieldKind::F: return {Complex(e.x, b.x), Complex(e.y, b.y), Complex(e.z, b.z)};
    case FieldKind::Fdag: return {Complex(e.x, -b.x), Complex(e.y, -b.y), Complex(e.z, -b.z)};
  }
  return {};
}

}  // namespace

ModesumMatrix modesum_commutator_matrix(const ModeLattice& lattice, FieldPair pair,
                                        Vec3 separation, double tau, double sigma2_sum) {
  const auto [first, second] = split_pair(pair);
  const std::size_t n = lattice.size();
  std::array<std::array<std::vector<Complex>, 3>, 3> terms;
  for (auto& row : terms) {
    for (auto& t : row) t.resize(n);
  }
  std::vector<double> scale_terms(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Mode& mode = lattice[i];
    // normalization imported from the field expansion: the same coefficient
    // that makes a single mode carry energy hbar omega |a|^2
    const double N = mode_normalization(mode.omega, lattice.volume(), lattice.units());
    const double N2 = N * N;
    const double damping = std::exp(-0.5 * sigma2_sum * dot(mode.k, mode.k));
    const double phase = dot(mode.k, separation) - mode.omega * tau;
    const Complex swing = Complex(0.0, 2.0 * std::sin(phase));  // e^{i ph} - e^{-i ph}

    const CVec3 u1a = polarization_factor(first, mode, 1);
    const CVec3 u1b = polarization_factor(first, mode, 2);
    const CVec3 u2a = polarization_factor(second, mode, 1);
    const CVec3 u2b = polarization_factor(second, mode, 2);

    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        const Complex coeff = u1a[k] * u2a[l] + u1b[k] * u2b[l];
        terms[k][l][i] = N2 * damping * coeff * swing;
      }
    }
    // cancellation yardstick: per-polarization magnitudes, accumulated before
    // any lambda or k <-> -k cancellation can hide them
    const auto max_component = [](const CVec3& u) {
      return std::max({std::abs(u.x), std::abs(u.y), std::abs(u.z)});
    };
    const double coeff_scale =
        max_component(u1a) * max_component(u2a) + max_component(u1b) * max_component(u2b);
    scale_terms[i] = N2 * damping * 2.0 * coeff_scale;
  }

  ModesumMatrix out;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) out.value[k][l] = pairwise_sum(terms[k][l]);
  }
  out.scale = pairwise_sum(scale_terms);
  out.cutoff = lattice.k_max();
  return out;
}

Mat3C fdagf_kernel_coefficient(const ModeLattice& lattice, std::size_t mode_index) {
  const Mode& mode = lattice[mode_index];
  const Mode& conj_mode = lattice[lattice.conjugate_index(mode_index)];
  const double N = mode_normalization(mode.omega, lattice.volume(), lattice.units());
  const double N2 = N * N;
  Mat3C A{};
  for (int lambda = 1; lambda <= 2; ++lambda) {
    const CVec3 u1 = polarization_factor(FieldKind::Fdag, mode, lambda);
    const CVec3 u2 = polarization_factor(FieldKind::F, mode, lambda);
    const CVec3 v1 = polarization_factor(FieldKind::Fdag, conj_mode, lambda);
    const CVec3 v2 = polarization_factor(FieldKind::F, conj_mode, lambda);
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        A[k][l] += N2 * (u1[k] * u2[l] - v1[k] * v2[l]);
      }
    }
  }
  return A;
}

double pauli_jordan_modesum(const ModeLattice& lattice, const TestFunction& g, double tau) {
  const double c = lattice.units().c;
  const double inv_V = 1.0 / lattice.volume();
  const Vec3 center = minimum_image(g.center, lattice.box_length());
  std::vector<double> terms(lattice.size() + 1);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Mode& mode = lattice[i];
    const double q = norm(mode.k);
    terms[i] = -inv_V * std::sin(mode.omega * tau) / q * g.fourier_damping(q * q) *
               std::cos(dot(mode.k, center));
  }
  // q = 0 limit of sin(c q tau)/q; the transverse lattice has no zero mode but
  // the scalar kernel does.
  terms[lattice.size()] = -inv_V * c * tau;
  return pairwise_sum(terms);
}

}  // namespace rsfield
