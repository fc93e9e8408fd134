#include <doctest.h>

#include "hb/hb_function.hpp"

#include <algorithm>

using namespace hb;

namespace {

const HBConstants& c30() {
  static const HBConstants c = solve_constants(30);
  return c;
}

const ZeroModel& z30() {
  static const ZeroModel z = build_zero_model(c30());
  return z;
}

std::vector<Complex> ring(double r, int n) { return circle_points(BigReal(r), n, BigReal(0.3)); }

}  // namespace

TEST_CASE("spherical Bessel values against closed forms") {
  PrecisionScope s(40);
  for (double xd : {0.3, 2.0, 17.5, -4.0}) {
    BigReal x(xd);
    auto j = spherical_bessel(3, x);
    BigReal j0 = sin(x) / x;
    BigReal j1 = sin(x) / (x * x) - cos(x) / x;
    BigReal j2 = (3L / (x * x) - 1L) * sin(x) / x - 3L * cos(x) / (x * x);
    CHECK(abs(j[0] - j0) < tenpow(-35));
    CHECK(abs(j[1] - j1) < tenpow(-35));
    CHECK(abs(j[2] - j2) < tenpow(-35));
  }
  auto at0 = spherical_bessel(4, BigReal(0L));
  CHECK(at0[0] == BigReal(1L));
  CHECK(at0[3].is_zero());
}

TEST_CASE("Taylor data of Phi and phi") {
  const HBConstants& c = c30();
  PrecisionScope s(c.working_digits);
  BigReal pi = BigReal::pi(), C = c.C, L = c.L1;
  auto tp = taylor_Phi_stable(c, 40);
  CHECK(abs(tp.coeffs[0] - 1L) < tenpow(-60));
  CHECK(abs(tp.coeffs[1] - L) < tenpow(-60));
  auto rec = taylor_Phi(c, 40);
  for (int n = 0; n <= 40; ++n) CHECK(abs(rec.coeffs[n] - tp.coeffs[n]) <= tenpow(-50) * abs(tp.coeffs[n]));

  auto phi = taylor_phi(c, 20);
  CHECK(abs(phi.coeffs[0] - 1L) < tenpow(-60));
  CHECK(abs(phi.coeffs[2] - 4L * C * L) < tenpow(-60));
  BigReal u2 = 96L * L * C * C * C + (24L * L * L + 2L * pi * pi) * C * C;
  CHECK(abs(phi.coeffs[4] - u2) < tenpow(-60));
  CHECK(abs(phi.coeffs[3]) < tenpow(-60));
  auto stable = taylor_phi_stable(c, 20);
  for (int n = 0; n <= 20; ++n) CHECK(abs(stable.coeffs[2 * n] - phi.coeffs[2 * n]) <= tenpow(-50) * abs(phi.coeffs[2 * n]));
}

TEST_CASE("recursion planner grows with T") {
  CHECK(plan_recursion_digits(30, 80, Which::Phi) > plan_recursion_digits(30, 20, Which::Phi));
  CHECK(plan_recursion_digits(30, 40, Which::phi) > plan_recursion_digits(30, 40, Which::Phi));
  PrecisionScope s(30);
  int T = taylor_order_for_radius(BigReal(5L), 30);
  CHECK(T > 8);
  BigReal x = BigReal::pi() * 5L / 2L;
  CHECK(pow(x, static_cast<long>(T)) / factorial(T) < tenpow(-30));
}

TEST_CASE("Phi solves its differential equation, the quadratic and the functional equation") {
  const HBConstants& c = c30();
  PrecisionScope s(c.working_digits);
  CHECK(check_ode_residual(c, ring(4.0, 12)).max_abs < tenpow(-50));
  CHECK(check_third_order_residual(c, ring(4.0, 12)).max_abs < tenpow(-50));
  CHECK(check_quadratic_relation(c, ring(2.5, 12)).max_abs < tenpow(-50));
  BigReal r0 = 1L / sqrt(2L * BigReal::pi() * c.C);
  CHECK(check_functional_equation(c, circle_points(r0, 12, BigReal(0.1))).max_abs < tenpow(-50));
}

TEST_CASE("kappa fit equals e^{+-i pi/4}/sqrt(4 pi C)") {
  const HBConstants& c = c30();
  PrecisionScope s(c.working_digits);
  auto k = fit_kappa(c, Complex(BigReal(0.7), BigReal(0.3)), Complex(BigReal(-0.4), BigReal(1.1)));
  BigReal m = 1L / sqrt(8L * BigReal::pi() * c.C);
  CHECK(abs(k.plus.re - m) < tenpow(-50));
  CHECK(abs(k.plus.im - m) < tenpow(-50));
  CHECK(abs(k.minus.re - m) < tenpow(-50));
  CHECK(abs(k.minus.im + m) < tenpow(-50));
}

TEST_CASE("rho coefficients match the closed forms") {
  const HBConstants& c = c30();
  auto a = rho_coefficients(c, 21);
  PrecisionScope s(c.working_digits);
  BigReal pi = BigReal::pi(), C = c.C, L = c.L1;
  CHECK(a[0].is_zero());
  CHECK(abs(a[1] + L / (pi * pi * C)) < tenpow(-50));
  CHECK(abs(a[2]) < tenpow(-60));
  BigReal a3 = (48L * L * C + pi * pi + 28L * L * L) / (24L * C * C) / pow(pi, 4L);
  CHECK(abs(a[3] - a3) < tenpow(-50));
  BigReal a5 = -(2880L * L * C * C + (60L * pi * pi + 1632L * L * L) * C + (23L * L * pi * pi + 332L * L * L * L)) /
               (120L * C * C * C) / pow(pi, 6L);
  CHECK(abs(a[5] - a5) < tenpow(-50));
  for (const auto& v : a) CHECK(v.sign() >= 0);
}

TEST_CASE("L_-(3), L_-(5) from the differential equation") {
  const HBConstants& c = c30();
  auto Lm = L_minus_odd(c, 3);
  PrecisionScope s(c.working_digits);
  BigReal pi = BigReal::pi(), C = c.C, L = c.L1;
  CHECK(abs(Lm[0] - L) < tenpow(-50));
  CHECK(abs(Lm[1] - (24L * L * C * C + (pi * pi / 2L + 2L * L * L) * C)) < tenpow(-50));
  BigReal l5 = 1920L * L * pow(C, 4L) + (40L * pi * pi + 448L * L * L) * pow(C, 3L) +
               (2L * L * pi * pi + 8L * L * L * L) * C * C;
  CHECK(abs(Lm[2] - l5) < tenpow(-50));
}

TEST_CASE("zero model: ordering, windows and Newton vs series") {
  const HBConstants& c = c30();
  const ZeroModel& z = z30();
  PrecisionScope s(c.working_digits);
  CHECK(z.M % 2 == 1);
  CHECK(z.gap.sign() > 0);
  CHECK(z.gap < BigReal(0.5));
  BigReal prev(0L);
  for (int n = 1; n <= 200; ++n) {
    BigReal t = z.tau(n);
    CHECK(t > BigReal(static_cast<long>(n)));
    CHECK(t < BigReal(static_cast<long>(n)) + BigReal(0.5));
    CHECK(t > prev);
    prev = t;
  }
  for (int n = 1; n <= z.n0; ++n)
    CHECK(abs(z.refined[n - 1] - z.series_tau(n)) <= z.tail_bound(n) + tenpow(-(c.working_digits - 10)));
  CHECK(z.signed_zero(2) < BigReal(0L));
  auto g = phi_eigenfunction(c);
  for (int n = 1; n <= 50; ++n) CHECK(abs(Phi_real(g, z.signed_zero(n))) < tenpow(-40));
}

TEST_CASE("partial sums of a_m 2^m increase toward 1/2") {
  const HBConstants& c = c30();
  auto a = rho_coefficients(c, 61);
  PrecisionScope s(c.working_digits);
  BigReal sum(0L), prev(-1L);
  for (int m = 1; m <= 61; m += 2) {
    sum += a[m] * pow(BigReal(2L), static_cast<long>(m));
    CHECK(sum > prev);
    CHECK(sum < BigReal(0.5));
    prev = sum;
  }
}

TEST_CASE("derivative identity at the zeros and the arctan zero map") {
  const HBConstants& c = c30();
  const ZeroModel& z = z30();
  PrecisionScope s(c.working_digits);
  for (int n = 1; n <= 4; ++n) CHECK(check_crucial_identity(c, z, n) < tenpow(-50));
  CHECK(zero_identity_residual(c, z, 3) < tenpow(-40));
  std::vector<BigReal> zs;
  for (int n = 1; n <= 10; ++n) zs.push_back(z.tau(n));
  auto fp = refine_zeros_fixed_point(c, zs, 1, z);
  CHECK(fp.update_norms[0] < tenpow(-40));
}

TEST_CASE("two formulas for C") {
  const HBConstants& c = c30();
  const ZeroModel& z = z30();
  PrecisionScope s(c.working_digits);
  BigReal bound, est;
  CHECK(abs(C_alternating(c, z, &bound) - c.C) < tenpow(-25));
  CHECK(abs(C_wallis(z, 2000, &est) - c.C) < tenpow(-6));
}

TEST_CASE("summation formula with 2000 zeros stays within the tail bound") {
  const HBConstants& c = c30();
  const ZeroModel& z = z30();
  PrecisionScope s(c.working_digits);
  std::vector<BigReal> zs;
  for (int n = 1; n <= 2000; ++n) zs.push_back(z.signed_zero(n));
  auto r = summation_check(sinc_power_test_function(), 1L / (2L * c.C), zs);
  CHECK(r.discrepancy <= r.tail_bound);
  CHECK(r.tail_bound < tenpow(-8));
}

TEST_CASE("second eigenfunction: zeros by fixed point agree with real sign changes") {
  PrecisionScope s(30);
  auto g = ground_eigenfunction(BigReal(1L), 64);
  auto fp = eigenfunction_zeros(g, 6);
  auto real = eigenfunction_real_zeros(g, BigReal(12L), 240);
  REQUIRE(!real.empty());
  for (const auto& r : real) {
    BigReal best(100L);
    for (const auto& m : fp) best = min(best, abs(m - r));
    CHECK(best < tenpow(-20));
    CHECK(abs(g.value(r)) < tenpow(-20));
  }
  CHECK(eigenfunction_zero_count(g, BigReal(11L), 400) == static_cast<int>(std::count_if(
                                                                real.begin(), real.end(),
                                                                [](const BigReal& x) { return abs(x) < BigReal(11L); })));
}
