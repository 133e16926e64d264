#include "rsfield/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rsfield/tensoralg.hpp"

namespace rsfield {

namespace {
constexpr double kPi = std::numbers::pi;

void require_sigma_fits(const TestFunction& tf, double box_length, const char* where) {
  if (tf.sigma > box_length / 10.0) {
    std::ostringstream msg;
    msg << where << ": sigma = " << tf.sigma << " exceeds L/10 = " << box_length / 10.0
        << "; the Gaussian tails are not negligible on the box";
    throw std::invalid_argument(msg.str());
  }
}
}  // namespace

double gaussian_overlap(double separation, double sigma2_sum) {
  return std::pow(2.0 * kPi * sigma2_sum, -1.5) *
         std::exp(-separation * separation / (2.0 * sigma2_sum));
}

Vec3 smeared_delta_gradient_vec(const TestFunction& f, const TestFunction& g, double box_length) {
  require_sigma_fits(f, box_length, "smeared_delta_gradient");
  require_sigma_fits(g, box_length, "smeared_delta_gradient");
  const Vec3 d = minimum_image(f.center - g.center, box_length);
  const double sigma2 = f.sigma * f.sigma + g.sigma * g.sigma;
  const double G = gaussian_overlap(norm(d), sigma2);
  return (-G / sigma2) * d;
}

double smeared_delta_gradient(const TestFunction& f, const TestFunction& g, int s,
                              double box_length) {
  if (s < 1 || s > 3) {
    throw std::out_of_range("smeared_delta_gradient: component index must be in 1..3");
  }
  return smeared_delta_gradient_vec(f, g, box_length)[s - 1];
}

SmearedLightCone::SmearedLightCone(double sigma2_sum) : sigma2_(sigma2_sum) {
  if (!(sigma2_sum > 0.0)) {
    throw std::invalid_argument("SmearedLightCone: variance must be positive");
  }
  a_ = 1.0 / (2.0 * sigma2_);
  kappa_ = 0.5 * sigma2_ * std::pow(2.0 * kPi * sigma2_, -1.5);
}

SmearedLightCone::Values SmearedLightCone::evaluate(double d, double R) const {
  // The explicit two-wall form loses (Sigma/d)^3 digits to cancellation as
  // d -> 0; switch to the series once that passes ~3 digits.
  const double sigma = std::sqrt(sigma2_);
  return d < 0.1 * sigma ? evaluate_series(d, R) : evaluate_direct(d, R);
}

SmearedLightCone::Values SmearedLightCone::evaluate_direct(double d, double R) const {
  const double m = d - R;
  const double p = d + R;
  const double Am = std::exp(-a_ * m * m);
  const double Ap = std::exp(-a_ * p * p);

  const double D1 = Am - Ap;
  const double D2 = m * Am - p * Ap;
  const double D3 = (1.0 - 2.0 * a_ * m * m) * Am - (1.0 - 2.0 * a_ * p * p) * Ap;
  const double D4 = m * Am + p * Ap;
  const double D5 = (2.0 * a_ * m * m - 1.0) * Am + (1.0 - 2.0 * a_ * p * p) * Ap;
  const double D6 = (1.0 - 2.0 * a_ * m * m) * Am + (1.0 - 2.0 * a_ * p * p) * Ap;

  Values v;
  v.w = -kappa_ * D1 / d;
  const double w_d = kappa_ * D1 / (d * d) + 2.0 * a_ * kappa_ * D2 / d;
  v.w_d_over_d = w_d / d;
  v.w_dd = -2.0 * kappa_ * D1 / (d * d * d) - 4.0 * a_ * kappa_ * D2 / (d * d) +
           2.0 * a_ * kappa_ * D3 / d;
  v.w_RR = -2.0 * a_ * kappa_ * D5 / d;
  v.w_dR = 2.0 * a_ * kappa_ * D4 / (d * d) - 2.0 * a_ * kappa_ * D6 / d;
  return v;
}

// Series branch: with t = d^2 and z = 2 a R,
//   W = -2 kappa e^{-a R^2} u(t),   u(t) = e^{-a t} sinh(z d)/d,
// expanded as u = sum U_m t^m with
//   U_m = sum_{j+n=m} (-a)^j / j!  *  z^{2n+1} / (2n+1)! .
// R-derivatives replace the z-coefficients by their derivatives in R.
SmearedLightCone::Values SmearedLightCone::evaluate_series(double d, double R) const {
  constexpr int kTerms = 30;
  const double z = 2.0 * a_ * R;
  const double z2 = z * z;

  double c[kTerms], cR[kTerms], cRR[kTerms];
  c[0] = z;
  cR[0] = 2.0 * a_;
  cRR[0] = 0.0;
  for (int n = 1; n < kTerms; ++n) {
    c[n] = c[n - 1] * z2 / (2.0 * n * (2.0 * n + 1.0));
    cR[n] = cR[n - 1] * z2 / ((2.0 * n - 1.0) * 2.0 * n);
    cRR[n] = (n == 1 ? 4.0 * a_ * a_ * z : cRR[n - 1] * z2 / ((2.0 * n - 2.0) * (2.0 * n - 1.0)));
  }

  double U[kTerms], UR[kTerms], URR[kTerms];
  for (int m = 0; m < kTerms; ++m) {
    double exp_coeff = 1.0;  // (-a)^j / j!
    U[m] = UR[m] = URR[m] = 0.0;
    for (int j = 0; j <= m; ++j) {
      const int n = m - j;
      U[m] += exp_coeff * c[n];
      UR[m] += exp_coeff * cR[n];
      URR[m] += exp_coeff * cRR[n];
      exp_coeff *= -a_ / (j + 1.0);
    }
  }

  const double t = d * d;
  double u = 0.0, u1 = 0.0, u2 = 0.0, uR = 0.0, uR1 = 0.0, uRR = 0.0;
  for (int m = kTerms - 1; m >= 0; --m) {
    u = u * t + U[m];
    uR = uR * t + UR[m];
    uRR = uRR * t + URR[m];
    if (m >= 1) {
      u1 = u1 * t + m * U[m];
      uR1 = uR1 * t + m * UR[m];
    }
    if (m >= 2) u2 = u2 * t + m * (m - 1.0) * U[m];
  }

  const double front = -2.0 * kappa_ * std::exp(-a_ * R * R);
  Values v;
  v.w = front * u;
  v.w_d_over_d = front * 2.0 * u1;
  v.w_dd = front * (2.0 * u1 + 4.0 * t * u2);
  v.w_dR = front * (uR1 - 2.0 * a_ * R * u1) * 2.0 * d;
  v.w_RR = front * (uRR - 4.0 * a_ * R * uR + (4.0 * a_ * a_ * R * R - 2.0 * a_) * u);
  return v;
}

double pauli_jordan_smeared(const TestFunction& g, double tau, const UnitSystem& units,
                            double box_length) {
  require_sigma_fits(g, box_length, "pauli_jordan_smeared");
  const double d = norm(minimum_image(g.center, box_length));
  const double R = units.c * tau;
  if (std::abs(R) + d + 6.0 * g.sigma >= 0.5 * box_length) {
    std::ostringstream msg;
    msg << "pauli_jordan_smeared: light cone exits the box (c|tau| + |center| + 6 sigma = "
        << std::abs(R) + d + 6.0 * g.sigma << " >= L/2 = " << 0.5 * box_length << ")";
    throw std::invalid_argument(msg.str());
  }
  if (tau == 0.0) return 0.0;  // the two shells coincide and cancel
  return SmearedLightCone(g.sigma * g.sigma).evaluate(d, R).w;
}

Complex UnequalTimeAnalytic::K_EE(int k, int l) const {
  const int ki = k - 1, li = l - 1;
  const double delta = ki == li ? 1.0 : 0.0;
  const double hess = dhat[ki] * dhat[li] * (wall.w_dd - wall.w_d_over_d) + delta * wall.w_d_over_d;
  return Complex(0.0, hbar_c_4pi) * (hess - delta * wall.w_RR);
}

Complex UnequalTimeAnalytic::K_EB(int k, int l) const {
  double geometry = 0.0;
  for (int s = 1; s <= 3; ++s) geometry += levi_civita(k, l, s) * dhat[s - 1];
  return Complex(0.0, hbar_c_4pi) * geometry * wall.w_dR;
}

Complex UnequalTimeAnalytic::K_FdF(int k, int l) const {
  return 2.0 * K_EE(k, l) + Complex(0.0, 2.0) * K_EB(k, l);
}

UnequalTimeAnalytic unequal_time_analytic(Vec3 separation, double tau, double sigma2_sum,
                                          const UnitSystem& units) {
  UnequalTimeAnalytic out;
  const double d = norm(separation);
  out.dhat = d > 0.0 ? separation / d : Vec3{};
  out.wall = SmearedLightCone(sigma2_sum).evaluate(d, units.c * tau);
  out.hbar_c_4pi = 4.0 * kPi * units.hbar * units.c;
  return out;
}

}  // namespace rsfield
