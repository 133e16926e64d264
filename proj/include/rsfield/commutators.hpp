#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsfield/amplitudes.hpp"
#include "rsfield/kernels.hpp"
#include "rsfield/modesum.hpp"

namespace rsfield {

enum class EvalMethod { Analytic, ModeSum };

const char* to_string(EvalMethod method);

/// The query object for every commutator check: which field pair, which
/// component indices (1..3), which time separation tau = t' - t, and the two
/// smearing functions (f attached to the primed/first field, g to the second).
struct CommutatorSpec {
  FieldPair pair = FieldPair::E_B;
  int k = 1;
  int l = 2;
  double tau = 0.0;
  TestFunction f;
  TestFunction g;
};

struct KernelValue {
  Complex value{};
  EvalMethod method = EvalMethod::Analytic;
  double cutoff = 0.0;  // lattice k_max for the modesum route, 0 for analytic
  double scale = 0.0;   // sum of absolute per-mode terms (modesum) or |value| scale
};

/// Result pair of the operator-Maxwell consistency check: the M tensor
/// component smeared against a test function, once assembled by convolving
/// the equal-time commutator kernel with the synthesized field, once from the
/// closed form -16 pi hbar c eps_{ksu} d_u F_l evaluated spectrally.
struct MTensorCheck {
  Complex lhs{};  // kernel-convolution route
  Complex rhs{};  // spectral-derivative route
};

/// Optional longitudinal contamination for the subsidiary-condition check:
/// adds `amplitude * khat` to the spectral coefficient of one mode.
struct LongitudinalInjection {
  std::size_t mode_index = 0;
  Complex amplitude{};
};

struct KernelSymmetryAudit {
  int sample_pairs = 0;
  std::uint64_t seed = 0;
  double cutoff = 0.0;
  double scale = 0.0;               // kernel magnitude yardstick
  double max_imag = 0.0;            // reality defect (quantum time-reversal constraint)
  double exchange_defect = 0.0;     // alpha_{kl}(rho) vs alpha_{lk}(-rho)
  double parity_defect = 0.0;       // pseudotensor parity pi = -1
  double sg_fraction = 0.0;         // norm fractions of the four projections
  double ag_fraction = 0.0;
  double su_fraction = 0.0;
  double au_fraction = 0.0;
  double vector_oddness_defect = 0.0;      // alpha_s(-rho) + alpha_s(rho)
  double vector_vs_analytic_rel = 0.0;     // extracted alpha_s vs smeared gradient form
  std::vector<Vec3> sample_points;
};

/// Evaluates every commutator query against one mode lattice (which fixes the
/// box, the units and the modesum cutoff). Pure and const; safe to share.
class CommutatorEvaluator {
 public:
  explicit CommutatorEvaluator(ModeLatticePtr lattice);

  const ModeLattice& lattice() const { return *lattice_; }
  const UnitSystem& units() const { return lattice_->units(); }
  double box_length() const { return lattice_->box_length(); }

  /// Equal-time commutator (spec.tau must be 0). Same-type pairs (F_F, Fd_Fd,
  /// E_E, B_B) are exactly zero in the analytic route and vanish by k <-> -k
  /// cancellation in the modesum route. The nonzero kernels are
  ///   [Fdag_k, F_l] = 8 pi hbar c eps_{kls'} d_{s'} delta^3,
  ///   [E_k, B_l]    = -i 4 pi hbar c eps_{kls'} d_{s'} delta^3,
  /// both smeared through the gradient-of-delta building block.
  KernelValue equal_time(const CommutatorSpec& spec, EvalMethod method) const;

  /// Unequal-time commutator; at tau = 0 the analytic route returns the
  /// equal-time value exactly (same closed form).
  KernelValue unequal_time(const CommutatorSpec& spec, EvalMethod method) const;

  /// Smeared Pauli-Jordan value (see pauli_jordan_smeared / _modesum).
  double pauli_jordan(const TestFunction& g, double tau, EvalMethod method) const;

  /// Two-route M tensor check for component (k, l, s), smeared against f.
  MTensorCheck m_tensor_check(const ModeAmplitudes& modes, int k, int l, int s,
                              const TestFunction& f) const;

  /// eps_{kls} M_{kls} smeared against f: proportional to the smeared
  /// divergence of F, hence ~0 on transverse states and nonzero under an
  /// injected longitudinal component.
  Complex subsidiary_contraction(const ModeAmplitudes& modes, const TestFunction& f,
                                 std::optional<LongitudinalInjection> injection = {}) const;

  /// The j-component of the contraction (d_jk d_ls - d_jl d_sk + d_js d_kl)
  /// M_{kls}: identically zero for the free-field kernel, any state.
  Complex maxwell_identity_contraction(const ModeAmplitudes& modes, const TestFunction& f,
                                       int j) const;

  /// Reproduce d_s F_l by convolving the field with the commutator kernel
  /// divided by -8 pi hbar c, and compare against the spectral derivative;
  /// returns the max-abs grid discrepancy (space derivatives are generated by
  /// the momentum, realized here at the c-number level).
  double generator_identity_check(const ModeAmplitudes& modes, const SpatialGrid& grid,
                                  int s) const;

  /// Sample the smeared equal-time kernel on +-separation pairs and audit the
  /// constraint chain: reality, exchange symmetry, pseudotensor parity, pure
  /// AU structure, odd extracted vector matching the smeared gradient form.
  KernelSymmetryAudit kernel_symmetry_audit(double sigma_f, double sigma_g, int sample_pairs,
                                            std::uint64_t seed) const;

  /// Scale yardstick for microcausality statements: the analytic |E_B| value
  /// of a light-cone-tangent configuration with the same widths.
  double light_cone_reference_scale(double sigma_f, double sigma_g, double tau) const;

 private:
  void validate(const CommutatorSpec& spec, bool unequal) const;

  ModeLatticePtr lattice_;
};

/// CSV export of kernel evaluations.
std::string kernel_csv_header();
std::string kernel_csv_row(const CommutatorSpec& spec, const KernelValue& value);

}  // namespace rsfield
