#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "rsfield/commutators.hpp"
#include "rsfield/maxwell.hpp"

using namespace rsfield;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Lab {
  UnitSystem units;
  SpatialGrid grid = build_grid(kTwoPi, 16);
  // commutator lattice: cutoff at 6 / sigma keeps the unit tests quick while
  // the Gaussian damping already sits at e^{-36}
  ModeLatticePtr lattice = build_mode_lattice(grid, 6.0 / 0.35, units);
  CommutatorEvaluator eval{lattice};
  TestFunction f{{0.0, 0.0, 1.0}, 0.35};
  TestFunction g{{0.0, 0.0, 0.0}, 0.35};
};

double rel(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}
}  // namespace

TEST_CASE("spec validation") {
  Lab lab;
  CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
  SUBCASE("bad index") {
    spec.k = 0;
    CHECK_THROWS_AS(static_cast<void>(lab.eval.equal_time(spec, EvalMethod::Analytic)),
                    std::out_of_range);
  }
  SUBCASE("tau must vanish for the equal-time query") {
    spec.tau = 0.1;
    CHECK_THROWS_AS(static_cast<void>(lab.eval.equal_time(spec, EvalMethod::Analytic)),
                    std::invalid_argument);
  }
  SUBCASE("oversized sigma") {
    spec.f = TestFunction({0, 0, 0}, kTwoPi / 5.0);
    CHECK_THROWS_AS(static_cast<void>(lab.eval.equal_time(spec, EvalMethod::Analytic)),
                    std::invalid_argument);
  }
  SUBCASE("light cone must fit in the box") {
    spec.tau = 3.0;
    CHECK_THROWS_AS(static_cast<void>(lab.eval.unequal_time(spec, EvalMethod::Analytic)),
                    std::invalid_argument);
  }
}

TEST_CASE("equal-time same-type commutators vanish on both routes") {
  Lab lab;
  for (const FieldPair pair :
       {FieldPair::F_F, FieldPair::Fd_Fd, FieldPair::E_E, FieldPair::B_B}) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        const CommutatorSpec spec{pair, k, l, 0.0, lab.f, lab.g};
        CHECK(lab.eval.equal_time(spec, EvalMethod::Analytic).value == Complex{});
        const KernelValue ms = lab.eval.equal_time(spec, EvalMethod::ModeSum);
        CHECK(std::abs(ms.value) <= 1e-12 * ms.scale);
      }
    }
  }
}

TEST_CASE("equal-time E_B kernel") {
  Lab lab;

  SUBCASE("diagonal components vanish, off-diagonal antisymmetric") {
    for (int k = 1; k <= 3; ++k) {
      const CommutatorSpec diag{FieldPair::E_B, k, k, 0.0, lab.f, lab.g};
      CHECK(lab.eval.equal_time(diag, EvalMethod::Analytic).value == Complex{});
    }
    const CommutatorSpec kl{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
    const CommutatorSpec lk{FieldPair::E_B, 2, 1, 0.0, lab.f, lab.g};
    const Complex v_kl = lab.eval.equal_time(kl, EvalMethod::Analytic).value;
    const Complex v_lk = lab.eval.equal_time(lk, EvalMethod::Analytic).value;
    CHECK(v_kl == -v_lk);
    CHECK(v_kl != Complex{});
  }

  SUBCASE("concentric equal-sigma smearing gives zero") {
    const TestFunction center({0.3, -0.2, 0.5}, 0.3);
    const CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, center, center};
    CHECK(lab.eval.equal_time(spec, EvalMethod::Analytic).value == Complex{});
    const KernelValue ms = lab.eval.equal_time(spec, EvalMethod::ModeSum);
    CHECK(std::abs(ms.value) <= 1e-12 * ms.scale);
  }

  SUBCASE("displaced centers: value is -i 4 pi hbar c times the smeared gradient") {
    const CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
    const Complex analytic = lab.eval.equal_time(spec, EvalMethod::Analytic).value;
    const double sdg = smeared_delta_gradient(lab.f, lab.g, 3, kTwoPi);
    const Complex expected = Complex(0.0, -4.0 * std::numbers::pi) * sdg;
    CHECK(rel(analytic, expected) <= 1e-14);
    CHECK(analytic.real() == 0.0);

    const KernelValue ms = lab.eval.equal_time(spec, EvalMethod::ModeSum);
    CHECK(rel(ms.value, analytic) <= 1e-6);

    // the independent quadrature oracle fixes the sign convention once
    const double sdg_oracle =
        oracles::smeared_delta_gradient_quadrature(lab.f, lab.g, 3, kTwoPi);
    CHECK(rel(analytic, Complex(0.0, -4.0 * std::numbers::pi) * sdg_oracle) <= 1e-8);
  }

  SUBCASE("Fd_F carries the 8 pi hbar c prefactor, real valued") {
    const CommutatorSpec spec{FieldPair::Fd_F, 1, 2, 0.0, lab.f, lab.g};
    const Complex analytic = lab.eval.equal_time(spec, EvalMethod::Analytic).value;
    const double sdg = smeared_delta_gradient(lab.f, lab.g, 3, kTwoPi);
    CHECK(analytic.imag() == 0.0);
    CHECK(analytic.real() == doctest::Approx(8.0 * std::numbers::pi * sdg).epsilon(1e-14));
    const KernelValue ms = lab.eval.equal_time(spec, EvalMethod::ModeSum);
    CHECK(rel(ms.value, analytic) <= 1e-6);
  }
}

TEST_CASE("kernel values scale with hbar and c") {
  Lab lab;
  const CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
  const Complex base = lab.eval.equal_time(spec, EvalMethod::ModeSum).value;

  const CommutatorEvaluator doubled_h(
      build_mode_lattice(lab.grid, 6.0 / 0.35, UnitSystem(2.0, 1.0)));
  CHECK(rel(doubled_h.equal_time(spec, EvalMethod::ModeSum).value, 2.0 * base) <= 1e-12);

  const CommutatorEvaluator doubled_c(
      build_mode_lattice(lab.grid, 6.0 / 0.35, UnitSystem(1.0, 2.0)));
  CHECK(rel(doubled_c.equal_time(spec, EvalMethod::ModeSum).value, 2.0 * base) <= 1e-12);
}

TEST_CASE("pauli-jordan two routes") {
  Lab lab;
  const TestFunction g({0, 0, 0}, 0.35);
  const double tau = 0.7;
  const double analytic = lab.eval.pauli_jordan(g, tau, EvalMethod::Analytic);
  const double modesum = lab.eval.pauli_jordan(g, tau, EvalMethod::ModeSum);
  CHECK(std::abs(modesum - analytic) <= 1e-4 * std::abs(analytic));
  CHECK(lab.eval.pauli_jordan(g, -tau, EvalMethod::ModeSum) ==
        doctest::Approx(-modesum).epsilon(1e-13));
  CHECK(lab.eval.pauli_jordan(g, 0.0, EvalMethod::ModeSum) == 0.0);
}

TEST_CASE("unequal-time commutators") {
  Lab lab;

  SUBCASE("EE and BB share one kernel; modesum agrees with the analytic route") {
    const double tau = 0.45;
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        const CommutatorSpec ee{FieldPair::E_E, k, l, tau, lab.f, lab.g};
        const CommutatorSpec bb{FieldPair::B_B, k, l, tau, lab.f, lab.g};
        const Complex v_ee = lab.eval.unequal_time(ee, EvalMethod::Analytic).value;
        const Complex v_bb = lab.eval.unequal_time(bb, EvalMethod::Analytic).value;
        CHECK(v_ee == v_bb);
        const KernelValue ms = lab.eval.unequal_time(ee, EvalMethod::ModeSum);
        if (std::abs(v_ee) > 1e-12 * ms.scale) {
          CHECK(rel(ms.value, v_ee) <= 1e-6);
        } else {
          CHECK(std::abs(ms.value) <= 1e-10 * ms.scale);
        }
      }
    }
  }

  SUBCASE("EB at finite tau: analytic wall derivative vs mode sum") {
    const double tau = 0.45;
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        const CommutatorSpec eb{FieldPair::E_B, k, l, tau, lab.f, lab.g};
        const Complex analytic = lab.eval.unequal_time(eb, EvalMethod::Analytic).value;
        const KernelValue ms = lab.eval.unequal_time(eb, EvalMethod::ModeSum);
        if (std::abs(analytic) > 1e-12 * ms.scale) {
          CHECK(rel(ms.value, analytic) <= 1e-6);
        } else {
          CHECK(std::abs(ms.value) <= 1e-10 * ms.scale);
        }
      }
    }
  }

  SUBCASE("F_F and Fd_Fd vanish at unequal times too") {
    const CommutatorSpec ff{FieldPair::F_F, 1, 2, 0.5, lab.f, lab.g};
    CHECK(lab.eval.unequal_time(ff, EvalMethod::Analytic).value == Complex{});
    const KernelValue ms = lab.eval.unequal_time(ff, EvalMethod::ModeSum);
    CHECK(std::abs(ms.value) <= 1e-12 * ms.scale);
  }

  SUBCASE("Fd_F equals 2 K_EE + 2i K_EB on the modesum route as well") {
    const double tau = 0.38;
    const CommutatorSpec fdf{FieldPair::Fd_F, 2, 3, tau, lab.f, lab.g};
    const CommutatorSpec ee{FieldPair::E_E, 2, 3, tau, lab.f, lab.g};
    const CommutatorSpec eb{FieldPair::E_B, 2, 3, tau, lab.f, lab.g};
    const Complex combo = 2.0 * lab.eval.unequal_time(ee, EvalMethod::ModeSum).value +
                          Complex(0.0, 2.0) * lab.eval.unequal_time(eb, EvalMethod::ModeSum).value;
    const KernelValue direct = lab.eval.unequal_time(fdf, EvalMethod::ModeSum);
    CHECK(std::abs(direct.value - combo) <= 1e-13 * direct.scale);
  }

  SUBCASE("tau -> 0 reproduces the equal-time kernel exactly (analytic route)") {
    CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
    const Complex equal = lab.eval.equal_time(spec, EvalMethod::Analytic).value;
    const Complex unequal_at_zero = lab.eval.unequal_time(spec, EvalMethod::Analytic).value;
    CHECK(equal == unequal_at_zero);

    spec.tau = 1e-4;
    const Complex near = lab.eval.unequal_time(spec, EvalMethod::Analytic).value;
    CHECK(rel(near, equal) <= 1e-6);
  }

  SUBCASE("spacelike-separated supports effectively commute") {
    const double sigma = 0.2;
    const CommutatorEvaluator eval(build_mode_lattice(lab.grid, 6.0 / sigma, lab.units));
    const TestFunction f({2.8, 0.0, 0.0}, sigma);
    const TestFunction g({0.0, 0.0, 0.0}, sigma);
    const double tau = 0.3;
    const double scale = eval.light_cone_reference_scale(sigma, sigma, tau);
    CHECK(scale > 0.0);
    for (const FieldPair pair : {FieldPair::E_E, FieldPair::E_B, FieldPair::Fd_F}) {
      const CommutatorSpec spec{pair, 1, 2, tau, f, g};
      CHECK(std::abs(eval.unequal_time(spec, EvalMethod::Analytic).value) <= 1e-8 * scale);
      CHECK(std::abs(eval.unequal_time(spec, EvalMethod::ModeSum).value) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("m tensor: two routes, identical first equation, subsidiary second") {
  Lab lab;
  const ModeLatticePtr field_lattice = build_mode_lattice(lab.grid, 3.0, lab.units);
  const ModeAmplitudes state = random_amplitudes(field_lattice, 5, 91);
  const TestFunction probe({0.3, 0.2, -0.4}, 0.35);

  SUBCASE("zero field gives zero on both routes") {
    const ModeAmplitudes empty(field_lattice);
    const MTensorCheck check = lab.eval.m_tensor_check(empty, 1, 2, 2, probe);
    CHECK(check.lhs == Complex{});
    CHECK(check.rhs == Complex{});
  }

  SUBCASE("kernel convolution equals the spectral closed form") {
    double scale = 0.0, diff = 0.0;
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        for (int s = 1; s <= 3; ++s) {
          const MTensorCheck check = lab.eval.m_tensor_check(state, k, l, s, probe);
          scale = std::max({scale, std::abs(check.lhs), std::abs(check.rhs)});
          diff = std::max(diff, std::abs(check.lhs - check.rhs));
        }
      }
    }
    CHECK(scale > 0.0);
    CHECK(diff <= 1e-8 * scale);
  }

  SUBCASE("single mode along z: a transverse component pair agrees") {
    const ModeAmplitudes single =
        plane_wave(field_lattice, {0.0, 0.0, 1.0}, 1, Complex(1.0, 0.0));
    const MTensorCheck check = lab.eval.m_tensor_check(single, 1, 2, 2, probe);
    CHECK(std::abs(check.rhs) > 0.0);
    CHECK(std::abs(check.lhs - check.rhs) <= 1e-10 * std::abs(check.rhs));
  }

  SUBCASE("first field equation contraction vanishes identically") {
    for (int j = 1; j <= 3; ++j) {
      const Complex value = lab.eval.maxwell_identity_contraction(state, probe, j);
      const MTensorCheck ref = lab.eval.m_tensor_check(state, 1, 2, 2, probe);
      CHECK(std::abs(value) <= 1e-10 * std::max(std::abs(ref.rhs), 1.0));
    }
  }

  SUBCASE("subsidiary contraction flags longitudinal contamination") {
    const std::size_t mode = *field_lattice->index_of({1, 0, 0});
    const LongitudinalInjection injection{mode, Complex(0.2, 0.0)};
    const double injected = std::abs(lab.eval.subsidiary_contraction(state, probe, injection));
    const double clean = std::abs(lab.eval.subsidiary_contraction(state, probe));
    CHECK(injected > 0.0);
    CHECK(clean <= 1e-8 * injected);
  }
}

TEST_CASE("generator identity: the kernel convolution is the gradient") {
  Lab lab;
  const ModeLatticePtr field_lattice = build_mode_lattice(lab.grid, 3.0, lab.units);
  const ModeAmplitudes state = random_amplitudes(field_lattice, 6, 17);
  const double scale = 3.0 * field_scale(synthesize(state, lab.grid, 0.0));
  for (int s = 1; s <= 3; ++s) {
    CHECK(lab.eval.generator_identity_check(state, lab.grid, s) <= 1e-8 * scale);
  }
}

TEST_CASE("kernel symmetry audit") {
  Lab lab;
  const KernelSymmetryAudit audit = lab.eval.kernel_symmetry_audit(0.35, 0.35, 4, 555);
  CHECK(audit.scale > 0.0);
  CHECK(audit.max_imag <= 1e-10 * audit.scale);
  CHECK(audit.exchange_defect <= 1e-10 * audit.scale);
  CHECK(audit.parity_defect <= 1e-10 * audit.scale);
  CHECK(audit.sg_fraction <= 1e-8);
  CHECK(audit.ag_fraction <= 1e-8);
  CHECK(audit.su_fraction <= 1e-8);
  CHECK(audit.au_fraction >= 1.0 - 1e-8);
  CHECK(audit.vector_oddness_defect <= 1e-10 * audit.scale);
  CHECK(audit.vector_vs_analytic_rel <= 1e-6);
  CHECK(audit.sample_points.size() == 8);

  // identical seeds reproduce identical sample points
  const KernelSymmetryAudit again = lab.eval.kernel_symmetry_audit(0.35, 0.35, 4, 555);
  for (std::size_t i = 0; i < audit.sample_points.size(); ++i) {
    CHECK(norm(again.sample_points[i] - audit.sample_points[i]) == 0.0);
  }
}

TEST_CASE("kernel CSV export") {
  Lab lab;
  const CommutatorSpec spec{FieldPair::E_B, 1, 2, 0.0, lab.f, lab.g};
  const KernelValue value = lab.eval.equal_time(spec, EvalMethod::ModeSum);
  CHECK(kernel_csv_header() ==
        "pair,k,l,tau,sigma1,sigma2,separation,method,cutoff,value_re,value_im");
  const std::string row = kernel_csv_row(spec, value);
  CHECK(row.find("E_B,1,2,0,") == 0);
  CHECK(row.find("modesum") != std::string::npos);
}
