#pragma once

#include "rsfield/testfunction.hpp"
#include "rsfield/units.hpp"
#include "rsfield/vec3.hpp"

namespace rsfield {

/// Overlap of two normalized Gaussians at center separation d:
///   integral f g d^3r = (2 pi S2)^{-3/2} exp(-|d|^2 / (2 S2)),  S2 = s1^2 + s2^2.
double gaussian_overlap(double separation, double sigma2_sum);

/// Smeared gradient-of-delta building block. Sign convention, fixed here and
/// derived once by integration by parts:
///   integral integral f(r') g(r) d_{s'} delta^3(r'-r)  =  - integral (d_s f) g d^3r
///                                                      =  - G(|d|) d_s / S2,
/// with d = center(f) - center(g) reduced to its minimum image on the box and
/// G the Gaussian overlap above. Both sigmas must satisfy sigma <= L/10.
Vec3 smeared_delta_gradient_vec(const TestFunction& f, const TestFunction& g, double box_length);
double smeared_delta_gradient(const TestFunction& f, const TestFunction& g, int s,
                              double box_length);

/// The light-cone shell distribution
///   D(rho, tau) = (1/4 pi rho) [ delta(rho + c tau) - delta(rho - c tau) ]
/// convolved with a normalized Gaussian of variance S2 gives a smooth radial
/// function W(d, R), R = c tau: two Gaussian walls at d = +-R,
///   W(d,R) = -(2 pi S2)^{-3/2} (S2/(2 d)) [ e^{-(d-R)^2/(2 S2)} - e^{-(d+R)^2/(2 S2)} ].
/// This class evaluates W and the radial derivatives needed to assemble every
/// smeared unequal-time commutator. Near d = 0 the explicit form has removable
/// 1/d singularities; evaluation switches to a power series in d^2 there.
class SmearedLightCone {
 public:
  explicit SmearedLightCone(double sigma2_sum);

  struct Values {
    double w = 0.0;         // W itself
    double w_d_over_d = 0.0;  // (dW/dd)/d, finite at d = 0
    double w_dd = 0.0;      // d^2 W / dd^2
    double w_dR = 0.0;      // mixed d,R derivative
    double w_RR = 0.0;      // d^2 W / dR^2
  };

  /// Signed R = c tau; all outputs odd in R except w_dR (even).
  Values evaluate(double d, double R) const;

  /// The two evaluation paths behind evaluate(): the explicit two-wall form
  /// (cancellation-limited as d -> 0) and the small-d power series. Exposed so
  /// the tests can pin their agreement on the overlap band.
  Values evaluate_direct(double d, double R) const;
  Values evaluate_series(double d, double R) const;

  double sigma2_sum() const { return sigma2_; }

 private:
  double sigma2_;
  double a_;      // 1 / (2 S2)
  double kappa_;  // (2 pi S2)^{-3/2} S2 / 2
};

/// Smeared Pauli-Jordan value integral g D(., tau) d^3rho for a Gaussian g.
/// For g centered at the origin this is the delta-shell closed form
///   -c tau * g~(c tau),  g~(r) = (2 pi sigma^2)^{-3/2} e^{-r^2/(2 sigma^2)};
/// off-center g evaluates the same shell against the displaced Gaussian.
/// Odd in tau and zero at tau = 0. Requires the light cone inside the box:
/// c|tau| + |center| + 6 sigma < L/2.
double pauli_jordan_smeared(const TestFunction& g, double tau, const UnitSystem& units,
                            double box_length);

/// Smeared unequal-time kernels, assembled from the derivative structures
/// acting on W (all derivatives moved onto the Gaussians by parts):
///   [E_k(r',t'), E_l(r,t)] and [B_k, B_l]:
///       i 4 pi hbar c ( d_k' d_l' - (delta_kl / c^2) d_t'^2 ) D
///   [E_k(r',t'), B_l(r,t)]:
///       i 4 pi hbar c eps_{kls} dhat_s  (d/dd)(d/dR) W    (x c from d_t')
///   [Fdag_k(r',t'), F_l(r,t)] = ([E,E] + [B,B]) + i ([E,B] - [B,E])
///                             = 2 K_EE + 2 i K_EB,
/// while [F,F] and [Fdag,Fdag] vanish identically: F carries only one helicity
/// of annihilation operators and the opposite helicity of creation operators,
/// so those commutators cancel mode by mode at every time separation.
struct UnequalTimeAnalytic {
  Complex K_EE(int k, int l) const;  // also K_BB
  Complex K_EB(int k, int l) const;
  Complex K_FdF(int k, int l) const;

  Vec3 dhat;                      // unit separation (zero vector if coincident)
  SmearedLightCone::Values wall;  // radial derivatives at (|d|, c tau)
  double hbar_c_4pi = 0.0;        // 4 pi hbar c
};

UnequalTimeAnalytic unequal_time_analytic(Vec3 separation, double tau, double sigma2_sum,
                                          const UnitSystem& units);

}  // namespace rsfield
