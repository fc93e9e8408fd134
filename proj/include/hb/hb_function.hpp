#pragma once

#include "hb/complex.hpp"
#include "hb/series.hpp"
#include "hb/spectral.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

class PrecisionLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Which { Phi, phi };

struct TaylorModel {
  Which which = Which::Phi;
  Series coeffs;  // Phi: alpha_n z^n; phi: u_n z^{2n} stored at exponent 2n
  BigReal a;
  BigReal b;
  BigReal lambda;
  int working_digits = 0;
};

// (a, b, lambda) of the Phi eigenproblem at b = pi/2
struct PhiParameters {
  BigReal a;
  BigReal b;
  BigReal lambda;
};
PhiParameters phi_parameters(const HBConstants& c);

// working digits the unstable forward recursions need for T coefficients
int plan_recursion_digits(int digits, int T, Which which);
// order T with (pi R / 2)^T / T! below 10^-digits
int taylor_order_for_radius(const BigReal& R, int digits);

// forward recursion for alpha_n; re-solves the constants at the planned
// precision when the supplied ones are too short, then rounds back
TaylorModel taylor_Phi(const HBConstants& c, int T);
// forward three-term relation for u_n, cross-checked against Phi(z)Phi(-z)
TaylorModel taylor_phi(const HBConstants& c, int T);
// alpha_n from the Legendre data: Phi(z) = sum (-1)^n xi_n j_n(pi z / 2)
TaylorModel taylor_Phi_stable(const HBConstants& c, int T);
// u_n = xi_n (-2/a)^n / (2n+1) (pi/2)^{2n}
TaylorModel taylor_phi_stable(const HBConstants& c, int T);

// growth envelope K (pi/2)^n n^2 / n!; returns first violating index or -1
int envelope_violation(const std::vector<BigReal>& alpha, const BigReal& K);

// spherical Bessel j_0..j_n at real x
std::vector<BigReal> spherical_bessel(int n, const BigReal& x);

// g(x) = sum (-1)^n xi_n j_n(x) at b = 1 scale, with derivative
struct LegendreEigenfunction {
  std::vector<BigReal> xi;
  BigReal a;  // b = 1 coupling
  BigReal lambda;
  BigReal value(const BigReal& x) const;
  BigReal derivative(const BigReal& x) const;
  // Taylor coefficients of g at the origin to order T
  std::vector<BigReal> taylor(int T) const;
  // sum i^n xi_n
  Complex endpoint_sum() const;
};

LegendreEigenfunction phi_eigenfunction(const HBConstants& c);
LegendreEigenfunction ground_eigenfunction(const BigReal& a, int N);

// real-axis Phi through the Legendre data
BigReal Phi_real(const LegendreEigenfunction& g, const BigReal& x);
BigReal Phi_real_derivative(const LegendreEigenfunction& g, const BigReal& x);

std::vector<BigReal> L_minus_odd(const HBConstants& c, int M);
std::vector<BigReal> L_minus_odd_from(const std::vector<BigReal>& u, const BigReal& C, int M);
// index m = 0..M, a_0 = 0
std::vector<BigReal> rho_coefficients(const HBConstants& c, int M);

struct ZeroModel {
  std::vector<BigReal> rho_coeffs;
  std::vector<BigReal> refined;  // tau_1..tau_{n0}
  int n0 = 0;
  int M = 0;
  BigReal gap;  // 1/2 - sum_{m<=M} a_m 2^m
  int working_digits = 0;

  BigReal rho(const BigReal& x) const;
  BigReal series_tau(int n) const;
  BigReal tail_bound(int n) const;
  BigReal tau(int n) const;
  // signed zero (-1)^{n+1} tau_n
  BigReal signed_zero(int n) const;
};

int default_rho_order(int digits);
ZeroModel build_zero_model(const HBConstants& c, int M = 0, int n0 = -1);

std::vector<BigReal> refine_zeros_newton(const HBConstants& c, int n0);
std::vector<BigReal> refine_zeros_newton(const HBConstants& c, const ZeroModel& model, int n0);

struct FixedPointResult {
  std::vector<BigReal> zeros;
  std::vector<BigReal> update_norms;   // l1 norm of each sweep's change
  std::vector<BigReal> contraction;    // ratio of successive update norms
};

// one application of n + 1/2 - (2/pi) sum_m (-1)^{m+1} arctan(1/(2 pi C tau_n tau_m))
std::vector<BigReal> zero_map(const HBConstants& c, const std::vector<BigReal>& zeros, const ZeroModel& tail_model);
FixedPointResult refine_zeros_fixed_point(const HBConstants& c, const std::vector<BigReal>& zeros, int sweeps,
                                          const ZeroModel& tail_model);
// residual of the arctan identity at index n (1-based) using model zeros
BigReal zero_identity_residual(const HBConstants& c, const ZeroModel& model, int n, int explicit_count = 60);

// E_s(x) = (1 - x rho(x))^{-s} = sum_j e_j x^j, j = 0..J
std::vector<BigReal> expansion_E(const std::vector<BigReal>& rho_coeffs, const BigReal& s, int J);
// sum_{n>n1} (n+1/2)^{-t} and sum_{n>n1} (-1)^n (n+1/2)^{-t}
BigReal half_integer_tail(const BigReal& t, int n1);
BigReal alternating_half_integer_tail(const BigReal& t, int n1);

struct Residual {
  BigReal max_abs;
  BigReal at_abs;  // |z| of the worst point
};

Residual check_ode_residual(const HBConstants& c, const std::vector<Complex>& points);
Residual check_third_order_residual(const HBConstants& c, const std::vector<Complex>& points);
Residual check_quadratic_relation(const HBConstants& c, const std::vector<Complex>& points);
Residual check_functional_equation(const HBConstants& c, const std::vector<Complex>& points);
BigReal check_crucial_identity(const HBConstants& c, const ZeroModel& model, int n);

struct KappaPair {
  Complex plus;
  Complex minus;
};
// solves z e^{a/(2z)} Phi(z) = k+ e^{-ibz} Phi(ia/(2bz)) + k- e^{ibz} Phi(-ia/(2bz)) at two points
KappaPair fit_kappa(const HBConstants& c, const Complex& z1, const Complex& z2);

// Phi via the functional equation, for |z| beyond the Taylor radius
Complex Phi_reflected(const HBConstants& c, const TaylorModel& small, const Complex& z);

std::vector<Complex> circle_points(const BigReal& radius, int count, const BigReal& phase = BigReal(0L));

struct TestFunction {
  std::function<BigReal(const BigReal&)> f;
  BigReal derivative_at_zero;
  BigReal decay_constant;  // |f(x)| <= K |x|^-decay_power
  int decay_power = 0;
  bool odd = false;
};
TestFunction sinc_power_test_function();

struct SummationResult {
  BigReal discrepancy;
  BigReal tail_bound;
  int zeros_used = 0;
};
SummationResult summation_check(const TestFunction& f, const BigReal& a_param, const std::vector<BigReal>& zeros);

// zeros of a Legendre eigenfunction at b = 1, k = +-1..+-K, via
// mu = pi k - arg w + arg g(i a / (2 mu)), skipping the spurious k = 0
std::vector<BigReal> eigenfunction_zeros(const LegendreEigenfunction& g, int K);
// real sign changes of g on [-R, R] refined by Newton
std::vector<BigReal> eigenfunction_real_zeros(const LegendreEigenfunction& g, const BigReal& R, int samples);
// zeros of g inside |x| < R by the argument principle on the Taylor series
int eigenfunction_zero_count(const LegendreEigenfunction& g, const BigReal& R, int samples);

struct CFormulas {
  BigReal alternating;
  BigReal alternating_bound;
  BigReal wallis;
  BigReal wallis_estimate;
};
BigReal C_alternating(const HBConstants& c, const ZeroModel& model, BigReal* bound = nullptr);
BigReal C_wallis(const ZeroModel& model, int n_max, BigReal* estimate = nullptr);

std::string zeros_csv(const ZeroModel& model, int count, int digits);

}  // namespace hb
