#include "rsfield/commutators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rsfield/fields.hpp"
#include "rsfield/reduction.hpp"
#include "rsfield/tensoralg.hpp"

namespace rsfield {

namespace {
constexpr double kPi = std::numbers::pi;

double epsilon_dot(int k, int l, Vec3 v) {
  double sum = 0.0;
  for (int s = 1; s <= 3; ++s) sum += levi_civita(k, l, s) * v[s - 1];
  return sum;
}

Complex fourier_point(const TestFunction& tf, Vec3 q) {
  // integral f(r) e^{i q.r} d^3 r for a lattice wavevector q
  return std::polar(tf.fourier_damping(dot(q, q)), dot(q, tf.center));
}

}  // namespace

const char* to_string(EvalMethod method) {
  return method == EvalMethod::Analytic ? "analytic" : "modesum";
}

CommutatorEvaluator::CommutatorEvaluator(ModeLatticePtr lattice) : lattice_(std::move(lattice)) {
  if (!lattice_) throw std::invalid_argument("CommutatorEvaluator: null lattice");
}

void CommutatorEvaluator::validate(const CommutatorSpec& spec, bool unequal) const {
  if (spec.k < 1 || spec.k > 3 || spec.l < 1 || spec.l > 3) {
    throw std::out_of_range("CommutatorSpec: component indices must be in 1..3");
  }
  const double L = box_length();
  for (const TestFunction* tf : {&spec.f, &spec.g}) {
    if (tf->sigma > L / 10.0) {
      std::ostringstream msg;
      msg << "CommutatorSpec: sigma = " << tf->sigma << " exceeds L/10 = " << L / 10.0;
      throw std::invalid_argument(msg.str());
    }
  }
  if (!unequal && spec.tau != 0.0) {
    throw std::invalid_argument("equal_time_commutator: spec.tau must be 0");
  }
  if (unequal) {
    const double reach =
        units().c * std::abs(spec.tau) + 6.0 * std::max(spec.f.sigma, spec.g.sigma);
    if (reach >= 0.5 * L) {
      std::ostringstream msg;
      msg << "unequal_time_commutator: light cone exits the box (c|tau| + 6 sigma = " << reach
          << " >= L/2 = " << 0.5 * L << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

KernelValue CommutatorEvaluator::equal_time(const CommutatorSpec& spec, EvalMethod method) const {
  validate(spec, false);
  const double sigma2 = spec.f.sigma * spec.f.sigma + spec.g.sigma * spec.g.sigma;
  const Vec3 d = minimum_image(spec.f.center - spec.g.center, box_length());

  if (method == EvalMethod::ModeSum) {
    const ModesumMatrix m = modesum_commutator_matrix(*lattice_, spec.pair, d, 0.0, sigma2);
    return {m.at(spec.k, spec.l), method, m.cutoff, m.scale};
  }

  Complex value{};
  switch (spec.pair) {
    case FieldPair::F_F:
    case FieldPair::Fd_Fd:
    case FieldPair::E_E:
    case FieldPair::B_B:
      // all same-type kernels vanish at equal time: duality invariance forces
      // beta = 0, and the exchange symmetry of the Fd_F kernel removes the rest
      break;
    case FieldPair::Fd_F: {
      const Vec3 sdg = smeared_delta_gradient_vec(spec.f, spec.g, box_length());
      value = 8.0 * kPi * units().hbar * units().c * epsilon_dot(spec.k, spec.l, sdg);
      break;
    }
    case FieldPair::E_B: {
      const Vec3 sdg = smeared_delta_gradient_vec(spec.f, spec.g, box_length());
      value = Complex(0.0, -4.0 * kPi * units().hbar * units().c) *
              epsilon_dot(spec.k, spec.l, sdg);
      break;
    }
  }
  return {value, method, 0.0, std::abs(value)};
}

KernelValue CommutatorEvaluator::unequal_time(const CommutatorSpec& spec,
                                              EvalMethod method) const {
  validate(spec, true);
  if (spec.tau == 0.0 && method == EvalMethod::Analytic) {
    return equal_time(spec, method);  // the closed forms coincide exactly at tau = 0
  }
  const double sigma2 = spec.f.sigma * spec.f.sigma + spec.g.sigma * spec.g.sigma;
  const Vec3 d = minimum_image(spec.f.center - spec.g.center, box_length());

  if (method == EvalMethod::ModeSum) {
    const ModesumMatrix m = modesum_commutator_matrix(*lattice_, spec.pair, d, spec.tau, sigma2);
    return {m.at(spec.k, spec.l), method, m.cutoff, m.scale};
  }

  const UnequalTimeAnalytic kernels = unequal_time_analytic(d, spec.tau, sigma2, units());
  Complex value{};
  switch (spec.pair) {
    case FieldPair::F_F:
    case FieldPair::Fd_Fd:
      break;  // identically zero at every separation (single-helicity content)
    case FieldPair::E_E:
    case FieldPair::B_B:
      value = kernels.K_EE(spec.k, spec.l);
      break;
    case FieldPair::E_B:
      value = kernels.K_EB(spec.k, spec.l);
      break;
    case FieldPair::Fd_F:
      value = kernels.K_FdF(spec.k, spec.l);
      break;
  }
  return {value, method, 0.0, std::abs(value)};
}

double CommutatorEvaluator::pauli_jordan(const TestFunction& g, double tau,
                                         EvalMethod method) const {
  const double analytic = pauli_jordan_smeared(g, tau, units(), box_length());
  if (method == EvalMethod::Analytic) return analytic;
  return pauli_jordan_modesum(*lattice_, g, tau);
}

MTensorCheck CommutatorEvaluator::m_tensor_check(const ModeAmplitudes& modes, int k, int l, int s,
                                                 const TestFunction& f) const {
  if (k < 1 || k > 3 || l < 1 || l > 3 || s < 1 || s > 3) {
    throw std::out_of_range("m_tensor_check: indices must be in 1..3");
  }
  const ModeLattice& lattice = modes.lattice();
  const std::vector<CVec3> coeff = spectral_coefficients(modes, 0.0);
  const double V = lattice.volume();

  std::vector<Complex> lhs_terms(lattice.size());
  std::vector<Complex> rhs_terms(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Vec3 q = lattice[i].k;
    const Complex f_tilde = fourier_point(f, q);
    // route 1: kernel coefficient A_{ks}(-q) of the equal-time [Fdag, F]
    // commutator, convolved with the field and smeared
    const Mat3C A_conj = fdagf_kernel_coefficient(lattice, lattice.conjugate_index(i));
    lhs_terms[i] = 2.0 * V * A_conj[k - 1][s - 1] * coeff[i][l - 1] * f_tilde;
    // route 2: -16 pi hbar c eps_{ksu} d_u F_l, spectrally
    Complex grad{};
    for (int u = 1; u <= 3; ++u) {
      grad += static_cast<double>(levi_civita(k, s, u)) * Complex(0.0, q[u - 1]) *
              coeff[i][l - 1];
    }
    rhs_terms[i] = -16.0 * kPi * lattice.units().hbar * lattice.units().c * grad * f_tilde;
  }
  return {pairwise_sum(lhs_terms), pairwise_sum(rhs_terms)};
}

Complex CommutatorEvaluator::subsidiary_contraction(
    const ModeAmplitudes& modes, const TestFunction& f,
    std::optional<LongitudinalInjection> injection) const {
  const ModeLattice& lattice = modes.lattice();
  std::vector<CVec3> coeff = spectral_coefficients(modes, 0.0);
  if (injection) {
    if (injection->mode_index >= lattice.size()) {
      throw std::out_of_range("subsidiary_contraction: injection mode index out of range");
    }
    const Vec3 khat = lattice[injection->mode_index].khat();
    for (int c = 0; c < 3; ++c) {
      coeff[injection->mode_index][c] += injection->amplitude * khat[c];
    }
  }
  const double V = lattice.volume();
  std::vector<Complex> terms(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Complex f_tilde = fourier_point(f, lattice[i].k);
    const Mat3C A_conj = fdagf_kernel_coefficient(lattice, lattice.conjugate_index(i));
    Complex sum{};
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        for (int s = 1; s <= 3; ++s) {
          const int eps = levi_civita(k, l, s);
          if (eps == 0) continue;
          sum += static_cast<double>(eps) * A_conj[k - 1][s - 1] * coeff[i][l - 1];
        }
      }
    }
    terms[i] = 2.0 * V * sum * f_tilde;
  }
  return pairwise_sum(terms);
}

Complex CommutatorEvaluator::maxwell_identity_contraction(const ModeAmplitudes& modes,
                                                          const TestFunction& f, int j) const {
  if (j < 1 || j > 3) {
    throw std::out_of_range("maxwell_identity_contraction: index must be in 1..3");
  }
  const ModeLattice& lattice = modes.lattice();
  const std::vector<CVec3> coeff = spectral_coefficients(modes, 0.0);
  const double V = lattice.volume();
  std::vector<Complex> terms(lattice.size());
  const int ji = j - 1;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Complex f_tilde = fourier_point(f, lattice[i].k);
    const Mat3C A_conj = fdagf_kernel_coefficient(lattice, lattice.conjugate_index(i));
    // (d_jk d_ls - d_jl d_sk + d_js d_kl) M_{kls} = M_{jll} - M_{kjk} + M_{kkj}
    Complex sum{};
    for (int x = 0; x < 3; ++x) {
      sum += A_conj[ji][x] * coeff[i][x];   // M_{jll}: k = j, s = l
      sum -= A_conj[x][x] * coeff[i][ji];   // M_{kjk}: l = j, s = k
      sum += A_conj[x][ji] * coeff[i][x];   // M_{kkj}: l = k, s = j
    }
    terms[i] = 2.0 * V * sum * f_tilde;
  }
  return pairwise_sum(terms);
}

double CommutatorEvaluator::generator_identity_check(const ModeAmplitudes& modes,
                                                     const SpatialGrid& grid, int s) const {
  if (s < 1 || s > 3) {
    throw std::out_of_range("generator_identity_check: index must be in 1..3");
  }
  const ModeLattice& lattice = modes.lattice();
  const std::vector<CVec3> coeff = spectral_coefficients(modes, 0.0);
  const double V = lattice.volume();
  const double inv_8pi_hbar_c =
      1.0 / (8.0 * kPi * lattice.units().hbar * lattice.units().c);

  std::vector<CVec3> convolution(lattice.size());
  std::vector<CVec3> derivative(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Mat3C A_conj = fdagf_kernel_coefficient(lattice, lattice.conjugate_index(i));
    // vector part of the kernel: A_{kl} = eps_{kls} v_s
    const Complex v_conj[3] = {A_conj[1][2], A_conj[2][0], A_conj[0][1]};
    const Complex iq_s(0.0, lattice[i].k[s - 1]);
    for (int c = 0; c < 3; ++c) {
      convolution[i][c] = -inv_8pi_hbar_c * V * v_conj[s - 1] * coeff[i][c];
      derivative[i][c] = iq_s * coeff[i][c];
    }
  }

  const ComplexVectorField conv_grid = synthesize_from_coefficients(convolution, lattice, grid);
  const ComplexVectorField deriv_grid = synthesize_from_coefficients(derivative, lattice, grid);
  double max_disc = 0.0;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < grid.point_count(); ++i) {
      max_disc =
          std::max(max_disc, std::abs(conv_grid.component[c][i] - deriv_grid.component[c][i]));
    }
  }
  return max_disc;
}

KernelSymmetryAudit CommutatorEvaluator::kernel_symmetry_audit(double sigma_f, double sigma_g,
                                                               int sample_pairs,
                                                               std::uint64_t seed) const {
  KernelSymmetryAudit audit;
  audit.sample_pairs = sample_pairs;
  audit.seed = seed;
  audit.cutoff = lattice_->k_max();
  const double L = box_length();
  const double sigma2 = sigma_f * sigma_f + sigma_g * sigma_g;
  audit.sample_points = make_sample_points(sample_pairs, L / 6.0, seed);

  const TestFunction g({0, 0, 0}, sigma_g);
  std::vector<Mat3> re_values(audit.sample_points.size());
  std::vector<ModesumMatrix> matrices(audit.sample_points.size());
  for (std::size_t i = 0; i < audit.sample_points.size(); ++i) {
    matrices[i] =
        modesum_commutator_matrix(*lattice_, FieldPair::Fd_F, audit.sample_points[i], 0.0, sigma2);
    audit.scale = std::max(audit.scale, matrices[i].scale);
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        audit.max_imag = std::max(audit.max_imag, std::abs(matrices[i].value[k][l].imag()));
        re_values[i][k][l] = matrices[i].value[k][l].real();
      }
    }
  }

  const Tensor3x3Field sampled(audit.sample_points, re_values);
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    const std::size_t ni = sampled.negation_index(i);
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        audit.exchange_defect = std::max(
            audit.exchange_defect, std::abs(sampled.value(i)[k][l] - sampled.value(ni)[l][k]));
      }
    }
  }
  audit.parity_defect = pseudotensor_parity_check(sampled);

  const GUSADecomposition parts = decompose_GU_SA(sampled);
  const auto frobenius = [](const Tensor3x3Field& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) sum += f.value(i)[k][l] * f.value(i)[k][l];
      }
    }
    return std::sqrt(sum);
  };
  const double total = frobenius(sampled);
  if (total > 0.0) {
    audit.sg_fraction = frobenius(parts.SG) / total;
    audit.ag_fraction = frobenius(parts.AG) / total;
    audit.su_fraction = frobenius(parts.SU) / total;
    audit.au_fraction = frobenius(parts.AU) / total;
  }

  double max_vec_analytic = 0.0;
  double max_vec_diff = 0.0;
  const double prefactor = 8.0 * kPi * units().hbar * units().c;
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    const Vec3 v = antisym_to_vector(parts.AU.value(i));
    const Vec3 v_neg = antisym_to_vector(parts.AU.value(sampled.negation_index(i)));
    audit.vector_oddness_defect =
        std::max(audit.vector_oddness_defect, norm(v + v_neg));
    const TestFunction f(audit.sample_points[i], sigma_f);
    const Vec3 v_analytic = prefactor * smeared_delta_gradient_vec(f, g, L);
    max_vec_analytic = std::max(max_vec_analytic, norm(v_analytic));
    max_vec_diff = std::max(max_vec_diff, norm(v - v_analytic));
  }
  audit.vector_vs_analytic_rel = max_vec_analytic > 0.0 ? max_vec_diff / max_vec_analytic : 0.0;
  return audit;
}

double CommutatorEvaluator::light_cone_reference_scale(double sigma_f, double sigma_g,
                                                       double tau) const {
  const double sigma2 = sigma_f * sigma_f + sigma_g * sigma_g;
  const double step = 0.5 * std::sqrt(sigma2);
  double scale = 0.0;
  for (int j = -2; j <= 2; ++j) {
    const double d = std::max(units().c * std::abs(tau) + j * step, 0.25 * step);
    const UnequalTimeAnalytic kernels =
        unequal_time_analytic(Vec3{0, 0, d}, tau, sigma2, units());
    scale = std::max({scale, std::abs(kernels.K_EB(1, 2)), std::abs(kernels.K_EE(1, 1)),
                      std::abs(kernels.K_EE(3, 3))});
  }
  return scale;
}

std::string kernel_csv_header() {
  return "pair,k,l,tau,sigma1,sigma2,separation,method,cutoff,value_re,value_im";
}

std::string kernel_csv_row(const CommutatorSpec& spec, const KernelValue& value) {
  std::ostringstream row;
  row.precision(17);
  row << to_string(spec.pair) << ',' << spec.k << ',' << spec.l << ',' << spec.tau << ','
      << spec.f.sigma << ',' << spec.g.sigma << ',' << norm(spec.f.center - spec.g.center) << ','
      << to_string(value.method) << ',' << value.cutoff << ',' << value.value.real() << ','
      << value.value.imag();
  return row.str();
}

}  // namespace rsfield
