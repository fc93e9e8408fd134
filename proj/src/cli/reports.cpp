#include "hb/cli.hpp"

#include <stdexcept>

namespace hb {

SuiteContext::SuiteContext(int digits, int tolerance_exponent) : digits_(digits) {
  PrecisionScope scope(digits + 20);
  tol_ = tenpow(-tolerance_exponent);
}

const HBConstants& SuiteContext::constants() {
  if (!c_) c_ = std::make_unique<HBConstants>(solve_constants(digits_));
  return *c_;
}

const ZeroModel& SuiteContext::zeros() {
  if (!z_) {
    const HBConstants& c = constants();
    z_ = std::make_unique<ZeroModel>(build_zero_model(c, std::max(121, default_rho_order(digits_))));
  }
  return *z_;
}

std::vector<Complex> spiral_points(const BigReal& r_max, int count) {
  std::vector<Complex> out;
  BigReal golden = BigReal::pi() * (3L - sqrt(BigReal(5L)));
  for (int k = 0; k < count; ++k)
    out.push_back(Complex::polar(r_max * static_cast<long>(k + 1) / static_cast<long>(count), golden * static_cast<long>(k)));
  return out;
}

namespace {

CheckItem item(std::string name, nlohmann::json params, BigReal disc, BigReal bound, BigReal tol,
               bool report_only = false) {
  CheckItem i{std::move(name), std::move(params), std::move(disc), std::move(bound), std::move(tol)};
  i.report_only = report_only;
  return i;
}

BigReal floor_bound(const HBConstants& c) { return tenpow(-(c.working_digits - 10)); }

void append(std::vector<CheckItem>& out, std::vector<CheckItem> more) {
  for (auto& m : more) out.push_back(std::move(m));
}

std::vector<CheckItem> suite_ode(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  const ZeroModel& z = ctx.zeros();
  PrecisionScope scope(c.working_digits);
  auto pts = spiral_points(BigReal(5L), 20);
  std::vector<CheckItem> out;
  auto ode = check_ode_residual(c, pts);
  out.push_back(item("Phi differential equation", {{"points", 20}, {"radius", 5}}, ode.max_abs, floor_bound(c), ctx.tol()));
  auto third = check_third_order_residual(c, pts);
  out.push_back(item("phi third-order equation", {{"points", 20}, {"radius", 5}}, third.max_abs, floor_bound(c), ctx.tol()));
  BigReal worst(0L);
  for (int n = 1; n <= 5; ++n) worst = max(worst, check_crucial_identity(c, z, n));
  out.push_back(item("derivative identity at the zeros", {{"n_max", 5}}, worst, floor_bound(c), ctx.tol()));
  return out;
}

std::vector<CheckItem> suite_quadratic(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  PrecisionScope scope(c.working_digits);
  auto r = check_quadratic_relation(c, spiral_points(BigReal(3L), 20));
  return {item("quadratic relation", {{"points", 20}, {"radius", 3}}, r.max_abs, floor_bound(c), ctx.tol())};
}

std::vector<CheckItem> suite_functional(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  const ZeroModel& z = ctx.zeros();
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  BigReal pi = BigReal::pi();
  BigReal r0 = 1L / sqrt(2L * pi * c.C);
  auto fe = check_functional_equation(c, circle_points(r0, 20, BigReal(0.1)));
  out.push_back(item("functional equation on |z| = 1/sqrt(2 pi C)", {{"points", 20}}, fe.max_abs, floor_bound(c), ctx.tol()));
  auto k = fit_kappa(c, Complex(BigReal(0.7), BigReal(0.3)), Complex(BigReal(-0.4), BigReal(1.1)));
  BigReal mod = 1L / sqrt(4L * pi * c.C);
  Complex ep = Complex::polar(BigReal(1L), pi / 4L);
  BigReal kd = max((k.plus - mod * ep).abs(), (k.minus - mod * ep.conj()).abs());
  out.push_back(item("fitted kappa = e^{+-i pi/4}/sqrt(4 pi C)", {}, kd, floor_bound(c), ctx.tol()));
  out.push_back(item("zero map identity at n = 2", {{"n", 2}}, zero_identity_residual(c, z, 2), floor_bound(c), ctx.tol()));
  LegendreEigenfunction g = phi_eigenfunction(c);
  BigReal worst(0L);
  for (int n = 1; n <= 50; ++n) worst = max(worst, abs(Phi_real(g, z.signed_zero(n))));
  out.push_back(item("|Phi(zero)| for n = 1..50", {{"n_max", 50}}, worst, floor_bound(c), ctx.tol()));
  BigReal ratio(0L);
  for (int n = 1; n <= z.n0; ++n)
    ratio = max(ratio, abs(z.refined[static_cast<size_t>(n - 1)] - z.series_tau(n)) / (z.tail_bound(n) + floor_bound(c)));
  out.push_back(item("Newton vs series zeros relative to the tail bound", {{"n0", z.n0}}, ratio, BigReal(1L), BigReal(1L)));
  std::vector<BigReal> zs;
  for (int n = 1; n <= 30; ++n) zs.push_back(z.tau(n));
  auto fixed = refine_zeros_fixed_point(c, zs, 1, z);
  out.push_back(item("fixed-point sweep from converged zeros", {{"N_z", 30}}, fixed.update_norms[0], floor_bound(c), ctx.tol()));
  for (auto& v : zs) v += tenpow(-3);
  auto pert = refine_zeros_fixed_point(c, zs, 4, z);
  BigReal contraction(0L);
  for (const auto& f : pert.contraction) contraction = max(contraction, f);
  out.push_back(item("fixed-point contraction factor", {{"sweeps", 4}}, contraction, BigReal(0L), BigReal(0.5), true));
  return out;
}

std::vector<CheckItem> suite_summation(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  const ZeroModel& z = ctx.zeros();
  std::vector<CheckItem> out;
  BigReal tol10 = tenpow(-10);
  {
    PrecisionScope scope(c.working_digits);
    std::vector<BigReal> zs;
    for (int n = 1; n <= 10000; ++n) zs.push_back(z.signed_zero(n));
    auto r = summation_check(sinc_power_test_function(), 1L / (2L * c.C), zs);
    out.push_back(item("summation formula, Phi system: defect plus tail",
                       {{"zeros", r.zeros_used}, {"finite_sum_defect", r.discrepancy.sci(6)}}, r.discrepancy + r.tail_bound,
                       r.tail_bound, tol10));
    BigReal bound;
    BigReal ca = C_alternating(c, z, &bound);
    out.push_back(item("C from the alternating zero sum", {}, abs(ca - c.C), bound, ctx.tol()));
    BigReal est;
    BigReal cw = C_wallis(z, 10000, &est);
    out.push_back(item("C from the Wallis-type product", {{"n_max", 10000}}, abs(cw - c.C), est, tenpow(-8)));
  }
  {
    PrecisionScope scope(std::max(30, ctx.digits()));
    LegendreEigenfunction g = ground_eigenfunction(BigReal(1L), 128);
    auto mus = eigenfunction_zeros(g, 5000);
    BigReal pi = BigReal::pi();
    std::vector<BigReal> zs;
    for (const auto& m : mus) zs.push_back(2L * m / pi);
    auto r = summation_check(sinc_power_test_function(), 2L / pi, zs);
    out.push_back(item("summation formula, eigenfunction at a = 2/pi, b = pi/2: defect plus tail",
                       {{"zeros", r.zeros_used}, {"finite_sum_defect", r.discrepancy.sci(6)}},
                       r.discrepancy + r.tail_bound, r.tail_bound, tol10));
  }
  return out;
}

std::vector<CheckItem> suite_fourier(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  FourierModel m = build_h(c, 80);
  m.legendre_coeffs = legendre_transform_model(c, 30);
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  BigReal worst(0L);
  for (int j = 0; j <= 10; ++j) {
    BigReal u = -1L + BigReal(static_cast<long>(j)) / 5L;
    worst = max(worst, abs(m.h(u) - m.legendre(u)));
  }
  BigReal leg_tail = abs(m.legendre_coeffs[28]) + abs(m.legendre_coeffs[30]) + floor_bound(c);
  out.push_back(item("h series vs Legendre expansion", {{"grid", 11}, {"K", 30}}, worst, leg_tail, tenpow(-15)));
  BigReal edge = max(abs(m.h(BigReal(1L))), abs(m.h(BigReal(-1L))));
  out.push_back(item("h(+-1) = 0", {}, edge, floor_bound(c), ctx.tol()));
  BigReal even(0L);
  for (int j = 0; j < 32; ++j) {
    BigReal u = BigReal(static_cast<long>(j)) / 31L;
    even = max(even, abs(m.h(u) - m.h(-u)));
  }
  out.push_back(item("h even", {{"grid", 32}}, even, floor_bound(c), ctx.tol()));
  out.push_back(item("(1/2) int h = phi(0) = 1", {}, abs(parseval_value(m) - 1L), floor_bound(c), ctx.tol()));
  auto k = kappa_constants(c);
  out.push_back(item("kappa+^2 - kappa-^2 = ia/(2b)", {}, k.involution_residual, floor_bound(c), ctx.tol()));
  out.push_back(item("kappa = e^{+-i pi/4}/sqrt(4 pi C)", {}, k.closed_form_residual, floor_bound(c), ctx.tol()));
  out.push_back(item("kappa+ e^{i pi/4} + kappa- e^{-i pi/4} = 0", {}, k.admissibility_residual, floor_bound(c), ctx.tol()));
  m.c_coeffs = c_basis_coefficients(m, 60, BigReal(1L));
  out.push_back(item("c-basis reconstruction", {{"K", 60}}, c_basis_residual(m, 64), floor_bound(c), ctx.tol()));
  BigReal sc(0L);
  for (const auto& v : m.c_coeffs) sc += v;
  out.push_back(item("sum c_n = h(0)", {}, abs(sc - m.h(BigReal(0L))), floor_bound(c), ctx.tol()));
  auto tr = c_basis_truncation(m, 4, 64);
  out.push_back(item("degree-4 least-squares fit in the c-basis",
                     {{"c1", tr.least_squares_coeffs[1].sci(15)}, {"c2", tr.least_squares_coeffs[2].sci(15)},
                      {"c3", tr.least_squares_coeffs[3].sci(15)}, {"c4", tr.least_squares_coeffs[4].sci(15)},
                      {"truncation_error", tr.truncation_error.sci(4)}},
                     tr.least_squares_error, BigReal(0L), tenpow(-10), true));
  auto q = quadrature_transform(c, {BigReal(0L), BigReal(0.25), BigReal(0.5)}, 2000);
  BigReal qd(0L);
  for (size_t i = 0; i < q.u.size(); ++i) qd = max(qd, abs(q.value[i] - m.h(q.u[i])));
  out.push_back(item("quadrature oracle at u = 0, 0.25, 0.5", {{"X", 2000}}, qd, q.tail_bound, tenpow(-6)));
  return out;
}

std::vector<CheckItem> suite_lseries(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  const ZeroModel& z = ctx.zeros();
  std::vector<CheckItem> out;
  append(out, check_l_plus_even(c, z, 5, ctx.tol()));
  append(out, check_Lodd(c, z, 3, ctx.tol()));
  append(out, check_residue_identity(c, z, 3, ctx.tol()));
  append(out, check_brute_force(c, z, tenpow(-12)));
  PrecisionScope scope(c.working_digits);
  int wrong = 0;
  for (long s = -8; s <= 4; ++s) {
    bool expect = s <= 1 && (1 - s) % 2 == 0;
    if (l_series(c, z, LKind::plus, BigReal(s)).is_pole != expect) ++wrong;
    if (l_series(c, z, LKind::minus, BigReal(s)).is_pole) ++wrong;
  }
  out.push_back(item("pole structure for s = -8..4", {}, BigReal(static_cast<long>(wrong)), BigReal(0L), BigReal(0L)));
  return out;
}

std::vector<CheckItem> suite_conjectures(SuiteContext& ctx) {
  const HBConstants& c = ctx.constants();
  const ZeroModel& z = ctx.zeros();
  auto out = check_symmetry_conjecture(c, z, 3, ctx.tol());
  out.push_back(integrality_item(check_integrality(200)));
  return out;
}

}  // namespace

std::vector<CheckItem> run_suite(const std::string& suite, SuiteContext& ctx) {
  if (suite == "ode") return suite_ode(ctx);
  if (suite == "quadratic") return suite_quadratic(ctx);
  if (suite == "functional") return suite_functional(ctx);
  if (suite == "summation") return suite_summation(ctx);
  if (suite == "fourier") return suite_fourier(ctx);
  if (suite == "lseries") return suite_lseries(ctx);
  if (suite == "conjectures") return suite_conjectures(ctx);
  if (suite == "all") {
    std::vector<CheckItem> out;
    for (const auto& s : verify_suites())
      if (s != "all") append(out, run_suite(s, ctx));
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace hb
