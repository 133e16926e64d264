#include <cstring>
#include <numbers>

#include "doctest.h"
#include "rsfield/grid.hpp"
#include "rsfield/modes.hpp"

using namespace rsfield;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("grid construction and periodic indexing") {
  const SpatialGrid grid = build_grid(kTwoPi, 8);
  CHECK(grid.point_count() == 512);
  CHECK(grid.spacing() == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-15));

  const SpatialGrid fine = build_grid(kTwoPi, 16);
  CHECK(fine.spacing() == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-15));
  CHECK(fine.flat_index(16, 0, 0) == fine.flat_index(0, 0, 0));
  CHECK(fine.flat_index(-1, 2, 3) == fine.flat_index(15, 2, 3));
  CHECK(fine.coordinate(16) == fine.coordinate(0));
}

TEST_CASE("grid rejects invalid parameters") {
  CHECK_THROWS_AS(build_grid(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(1.0, 7), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(-1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(0.0, 8), std::invalid_argument);
}

TEST_CASE("mode lattice counts unit and face-diagonal shells") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  CHECK(build_mode_lattice(grid, 1.0)->size() == 6);
  CHECK(build_mode_lattice(grid, std::sqrt(2.0))->size() == 18);
}

TEST_CASE("mode lattice rejects an empty cutoff") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  CHECK_THROWS_WITH_AS(static_cast<void>(build_mode_lattice(grid, 0.5)),
                       doctest::Contains("empty lattice"), std::invalid_argument);
}

TEST_CASE("every mode carries an orthonormal right-handed transverse triad") {
  const SpatialGrid grid = build_grid(kTwoPi, 32);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 5.0);
  REQUIRE(lattice->size() > 0);
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    const Mode& mode = (*lattice)[i];
    CHECK(std::abs(dot(mode.k, mode.e1)) <= 1e-12);
    CHECK(std::abs(dot(mode.k, mode.e2)) <= 1e-12);
    CHECK(std::abs(dot(mode.e1, mode.e1) - 1.0) <= 1e-12);
    CHECK(std::abs(dot(mode.e2, mode.e2) - 1.0) <= 1e-12);
    CHECK(std::abs(dot(mode.e1, mode.e2)) <= 1e-12);
    CHECK(norm(cross(mode.e1, mode.e2) - mode.khat()) <= 1e-12);
    CHECK(mode.omega == doctest::Approx(norm(mode.k)).epsilon(1e-15));
  }
}

TEST_CASE("lattice is closed under k -> -k") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 3.2);
  for (std::size_t i = 0; i < lattice->size(); ++i) {
    const std::size_t j = lattice->conjugate_index(i);
    CHECK(norm((*lattice)[i].k + (*lattice)[j].k) == 0.0);
    CHECK(lattice->conjugate_index(j) == i);
  }
}

TEST_CASE("rebuilding the lattice reproduces bit-identical triads") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const ModeLatticePtr a = build_mode_lattice(grid, 4.0);
  const ModeLatticePtr b = build_mode_lattice(grid, 4.0);
  REQUIRE(a->size() == b->size());
  for (std::size_t i = 0; i < a->size(); ++i) {
    CHECK(std::memcmp(&(*a)[i].e1, &(*b)[i].e1, sizeof(Vec3)) == 0);
    CHECK(std::memcmp(&(*a)[i].e2, &(*b)[i].e2, sizeof(Vec3)) == 0);
    CHECK((*a)[i].omega == (*b)[i].omega);
  }
}

TEST_CASE("omega scales with the speed of light") {
  const SpatialGrid grid = build_grid(kTwoPi, 16);
  const ModeLatticePtr slow = build_mode_lattice(grid, 2.0, UnitSystem(1.0, 1.0));
  const ModeLatticePtr fast = build_mode_lattice(grid, 2.0, UnitSystem(1.0, 2.0));
  for (std::size_t i = 0; i < slow->size(); ++i) {
    CHECK((*fast)[i].omega == doctest::Approx(2.0 * (*slow)[i].omega).epsilon(1e-15));
  }
}
