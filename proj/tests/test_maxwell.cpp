#include <numbers>

#include "doctest.h"
#include "rsfield/maxwell.hpp"

using namespace rsfield;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

FieldConfiguration empty_config(const SpatialGrid& grid) {
  FieldConfiguration config{grid, 0.0, {}};
  for (int c = 0; c < 3; ++c) config.F.component[c].assign(grid.point_count(), Complex{});
  return config;
}

ComplexVectorField zero_field(const SpatialGrid& grid) {
  ComplexVectorField f;
  for (int c = 0; c < 3; ++c) f.component[c].assign(grid.point_count(), Complex{});
  return f;
}

// F = (0, 0, sin x): curl = (0, -cos x, 0), div = 0
FieldConfiguration sin_x_zhat(const SpatialGrid& grid) {
  FieldConfiguration config = empty_config(grid);
  const int N = grid.points_per_axis();
  for (int ix = 0; ix < N; ++ix) {
    for (int iy = 0; iy < N; ++iy) {
      for (int iz = 0; iz < N; ++iz) {
        config.F.component[2][grid.flat_index(ix, iy, iz)] = std::sin(grid.coordinate(ix));
      }
    }
  }
  return config;
}

// F = (sin x, 0, 0): div = cos x, curl = 0
FieldConfiguration sin_x_xhat(const SpatialGrid& grid) {
  FieldConfiguration config = empty_config(grid);
  const int N = grid.points_per_axis();
  for (int ix = 0; ix < N; ++ix) {
    for (int iy = 0; iy < N; ++iy) {
      for (int iz = 0; iz < N; ++iz) {
        config.F.component[0][grid.flat_index(ix, iy, iz)] = std::sin(grid.coordinate(ix));
      }
    }
  }
  return config;
}
}  // namespace

TEST_CASE("spectral curl and divergence reproduce closed forms") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);

  SUBCASE("constant field has zero curl and divergence") {
    FieldConfiguration config = empty_config(grid);
    for (int c = 0; c < 3; ++c) {
      config.F.component[c].assign(grid.point_count(), Complex(1.0, -2.0));
    }
    const ComplexVectorField curled = curl(config);
    const std::vector<Complex> dived = divergence(config);
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
      for (int c = 0; c < 3; ++c) CHECK(std::abs(curled.component[c][i]) <= 1e-12);
      CHECK(std::abs(dived[i]) <= 1e-12);
    }
  }

  SUBCASE("curl of (0,0,sin x) is (0,-cos x,0)") {
    const FieldConfiguration config = sin_x_zhat(grid);
    const ComplexVectorField curled = curl(config);
    const int N = grid.points_per_axis();
    for (int ix = 0; ix < N; ++ix) {
      const std::size_t i = grid.flat_index(ix, 3, 5);
      CHECK(std::abs(curled.component[0][i]) <= 1e-12);
      CHECK(std::abs(curled.component[1][i] + std::cos(grid.coordinate(ix))) <= 1e-12);
      CHECK(std::abs(curled.component[2][i]) <= 1e-12);
    }
  }

  SUBCASE("divergence of (sin x,0,0) is cos x") {
    const FieldConfiguration config = sin_x_xhat(grid);
    const std::vector<Complex> dived = divergence(config);
    const int N = grid.points_per_axis();
    for (int ix = 0; ix < N; ++ix) {
      CHECK(std::abs(dived[grid.flat_index(ix, 1, 2)] - std::cos(grid.coordinate(ix))) <=
            1e-12);
    }
  }
}

TEST_CASE("maxwell residual on closed-form broken states") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const UnitSystem units;
  SUBCASE("static (0,0,sin x): curl defect 1, no divergence") {
    const MaxwellResidual res = maxwell_residual(sin_x_zhat(grid), zero_field(grid), units);
    CHECK(res.curl_residual == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(res.div_residual <= 1e-12);
  }
  SUBCASE("static (sin x,0,0): pure divergence defect 1") {
    const MaxwellResidual res = maxwell_residual(sin_x_xhat(grid), zero_field(grid), units);
    CHECK(res.div_residual == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("synthesized states satisfy the field equations") {
  const SpatialGrid grid = build_grid(kTwoPi, 32);
  const UnitSystem units(1.0, 1.0);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 4.0, units);
  const ModeAmplitudes m = random_amplitudes(lattice, 20, 314);
  const FieldConfiguration config = synthesize(m, grid, 0.15);
  const ComplexVectorField dF_dt = synthesize_time_derivative(m, grid, 0.15);
  const MaxwellResidual res = maxwell_residual(config, dF_dt, units);
  const double scale = field_scale(config);
  CHECK(res.curl_residual <= 1e-10 * scale);
  CHECK(res.div_residual <= 1e-10 * scale);

  // the same state with c = 3 evolves three times faster but still satisfies
  // the equations with the matching unit system
  const UnitSystem fast(1.0, 3.0);
  const ModeLatticePtr lattice3 = build_mode_lattice(grid, 4.0, fast);
  const ModeAmplitudes m3 = random_amplitudes(lattice3, 20, 314);
  const MaxwellResidual res3 = maxwell_residual(synthesize(m3, grid, 0.15),
                                                synthesize_time_derivative(m3, grid, 0.15), fast);
  CHECK(res3.curl_residual <= 1e-10 * scale);
}

TEST_CASE("finite-difference time derivative cross-checks the analytic route") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 3.0);
  const ModeAmplitudes m = random_amplitudes(lattice, 6, 11);
  const ComplexVectorField exact = synthesize_time_derivative(m, grid, 0.4);
  const ComplexVectorField fd = time_derivative_finite_difference(m, grid, 0.4);
  double diff = 0.0, scale = 0.0;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
      diff = std::max(diff, std::abs(exact.component[c][i] - fd.component[c][i]));
      scale = std::max(scale, std::abs(exact.component[c][i]));
    }
  }
  CHECK(diff <= 1e-6 * scale);
}

TEST_CASE("evolve is the exact phase rotation") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 2.5);
  const ModeAmplitudes m = random_amplitudes(lattice, 6, 21);

  SUBCASE("dt = 0 is the identity") {
    const ModeAmplitudes same = evolve(m, 0.0);
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      CHECK(same.at(i, 1) == m.at(i, 1));
      CHECK(same.at(i, 2) == m.at(i, 2));
    }
  }

  SUBCASE("half period negates a single mode") {
    const ModeAmplitudes single = plane_wave(lattice, {1.0, 0.0, 0.0}, 1, Complex(1.0, 0.5));
    const ModeAmplitudes half = evolve(single, std::numbers::pi);  // omega = 1
    const std::size_t idx = *lattice->index_of({1, 0, 0});
    CHECK(std::abs(half.at(idx, 1) + single.at(idx, 1)) <= 1e-15);
  }

  SUBCASE("evolve(dt) then evolve(-dt) recovers the state") {
    const ModeAmplitudes back = evolve(evolve(m, 1.7), -1.7);
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      for (int lambda = 1; lambda <= 2; ++lambda) {
        CHECK(std::abs(back.at(i, lambda) - m.at(i, lambda)) <= 1e-15);
      }
    }
  }

  SUBCASE("composition: evolve(a)+evolve(b) = evolve(a+b)") {
    const ModeAmplitudes two_step = evolve(evolve(m, 0.3), 0.5);
    const ModeAmplitudes one_step = evolve(m, 0.8);
    for (std::size_t i = 0; i < lattice->size(); ++i) {
      CHECK(std::abs(two_step.at(i, 1) - one_step.at(i, 1)) <= 1e-14);
    }
  }
}

TEST_CASE("energy and momentum: zero field, quadratic scaling, conservation") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const UnitSystem units;
  const ModeLatticePtr lattice = build_mode_lattice(grid, 3.0, units);

  CHECK(energy(empty_config(grid), units) == 0.0);
  CHECK(norm(momentum(empty_config(grid), units)) == 0.0);

  const ModeAmplitudes m = random_amplitudes(lattice, 8, 5);
  const double H1 = energy(synthesize(m, grid, 0.0), units);
  const double H2 = energy(synthesize(m.scaled(Complex(2.0, 0.0)), grid, 0.0), units);
  CHECK(H2 == doctest::Approx(4.0 * H1).epsilon(1e-12));

  const Vec3 P1 = momentum(synthesize(m, grid, 0.0), units);
  const Vec3 P2 = momentum(synthesize(m.scaled(Complex(2.0, 0.0)), grid, 0.0), units);
  CHECK(norm(P2 - 4.0 * P1) <= 1e-12 * (4.0 * norm(P1) + 1e-30));

  // Parseval: grid route equals the mode route
  const EnergyMomentum grid_route = energy_momentum(synthesize(m, grid, 0.0), units);
  const EnergyMomentum mode_route = energy_momentum(m);
  CHECK(grid_route.H == doctest::Approx(mode_route.H).epsilon(1e-10));
  CHECK(norm(grid_route.P - mode_route.P) <= 1e-10 * mode_route.H);

  // conservation under evolution
  const double H_later = energy(synthesize(evolve(m, 2.31), grid, 0.0), units);
  CHECK(H_later == doctest::Approx(H1).epsilon(1e-12));
}

TEST_CASE("single plane wave: dispersion |P| = H/c and the peak-field formula") {
  const SpatialGrid grid = build_grid(kTwoPi, 32);
  const UnitSystem units;
  const ModeLatticePtr lattice = build_mode_lattice(grid, 2.0, units);
  const ModeAmplitudes m = plane_wave(lattice, {0.0, 0.0, 1.0}, 1, Complex(1.0, 0.0));
  const FieldConfiguration config = synthesize(m, grid, 0.0);
  const EnergyMomentum em = energy_momentum(config, units);

  CHECK(norm(em.P) == doctest::Approx(em.H / units.c).epsilon(1e-10));
  CHECK(em.P.z == doctest::Approx(norm(em.P)).epsilon(1e-10));
  CHECK(em.H == doctest::Approx(units.hbar * 1.0).epsilon(1e-10));  // hbar omega |a|^2

  const auto [E, B] = to_EB(config);
  double E0 = 0.0;
  for (int c = 0; c < 3; ++c) {
    for (double v : E.component[c]) E0 = std::max(E0, std::abs(v));
  }
  CHECK(em.H == doctest::Approx(E0 * E0 * grid.volume() / (8.0 * std::numbers::pi))
                    .epsilon(1e-10));
}

TEST_CASE("momentum bound |P| <= H/c") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const UnitSystem units(1.0, 2.7);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 3.0, units);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ModeAmplitudes m = random_amplitudes(lattice, 10, seed);
    const EnergyMomentum em = energy_momentum(synthesize(m, grid, 0.0), units);
    CHECK(norm(em.P) <= em.H / units.c * (1.0 + 1e-12));
  }
}

TEST_CASE("energy cross term: the quadratic form is not additive") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const UnitSystem units;
  const ModeLatticePtr lattice = build_mode_lattice(grid, 3.0, units);
  const ModeAmplitudes m1 = random_amplitudes(lattice, 5, 31);

  SUBCASE("equal states: cross = 2 H1, total = 4 H1") {
    const EnergyCrossTerm cross = energy_cross_term(m1, m1, grid, units);
    CHECK(cross.cross == doctest::Approx(2.0 * cross.H1).epsilon(1e-12));
    CHECK(cross.H12 == doctest::Approx(4.0 * cross.H1).epsilon(1e-12));
  }

  SUBCASE("opposite states annihilate") {
    const EnergyCrossTerm cross = energy_cross_term(m1, m1.scaled(Complex(-1.0, 0.0)), grid,
                                                    units);
    CHECK(cross.H12 <= 1e-12 * cross.H1);
    CHECK(cross.cross == doctest::Approx(-2.0 * cross.H1).epsilon(1e-12));
  }

  SUBCASE("distinct wavevectors are orthogonal on the box") {
    const ModeAmplitudes a = plane_wave(lattice, {1.0, 0.0, 0.0}, 1, Complex(0.9, 0.1));
    const ModeAmplitudes b = plane_wave(lattice, {0.0, 0.0, 2.0}, 2, Complex(0.4, -0.6));
    const EnergyCrossTerm cross = energy_cross_term(a, b, grid, units);
    CHECK(std::abs(cross.cross) <= 1e-10 * (cross.H1 + cross.H2));
  }

  SUBCASE("cross term equals the bilinear overlap") {
    const ModeAmplitudes m2 = random_amplitudes(lattice, 5, 32);
    const EnergyCrossTerm cross = energy_cross_term(m1, m2, grid, units);
    const double overlap =
        bilinear_energy_overlap(synthesize(m1, grid, 0.0), synthesize(m2, grid, 0.0), units);
    CHECK(std::abs(cross.cross - overlap) <= 1e-12 * (cross.H1 + cross.H2));
  }
}
