#include <doctest.h>

#include "hb/ntlab.hpp"
#include "hb/special.hpp"

using namespace hb;

namespace {

const HBConstants& c40() {
  static const HBConstants c = solve_constants(40);
  return c;
}

const ZeroModel& z40() {
  static const ZeroModel z = build_zero_model(c40(), 121);
  return z;
}

}  // namespace

TEST_CASE("half-integer tails against zeta and beta") {
  PrecisionScope s(40);
  // sum_{n>=1} (n+1/2)^-s = 2^s (zeta(s)(1-2^-s) - 1)
  BigReal t(3L);
  BigReal expect = pow(BigReal(2L), t) * (zeta(t) * (1L - pow(BigReal(2L), -t)) - 1L);
  CHECK(abs(half_integer_tail(t, 0) - expect) < tenpow(-35));
  BigReal alt = pow(BigReal(2L), t) * (dirichlet_beta(t) - 1L);
  CHECK(abs(alternating_half_integer_tail(t, 0) - alt) < tenpow(-35));
  BigReal direct = half_integer_tail(t, 0) - pow(BigReal(1.5), -t) - pow(BigReal(2.5), -t);
  CHECK(abs(half_integer_tail(t, 2) - direct) < tenpow(-35));
}

TEST_CASE("L_-(1) equals L_tau(1) and L_+(2) = -4 C L_-(1)") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  PrecisionScope s(c.working_digits);
  auto lm1 = l_series(c, z, LKind::minus, BigReal(1L));
  auto lp2 = l_series(c, z, LKind::plus, BigReal(2L));
  CHECK(abs(lm1.value - c.L1) <= lm1.error_bound);
  CHECK(abs(lp2.value + 4L * c.C * lm1.value) < tenpow(-40));
}

TEST_CASE("pole structure") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  PrecisionScope s(c.working_digits);
  for (long sv : {1L, -1L, -3L, -5L}) CHECK(l_series(c, z, LKind::plus, BigReal(sv)).is_pole);
  for (long sv : {0L, -2L, 2L}) CHECK_FALSE(l_series(c, z, LKind::plus, BigReal(sv)).is_pole);
  for (long sv : {1L, -1L, 0L}) CHECK_FALSE(l_series(c, z, LKind::minus, BigReal(sv)).is_pole);
  CHECK(abs(l_series(c, z, LKind::plus, BigReal(1L)).residue - 1L) < tenpow(-40));
}

TEST_CASE("check items gate on tolerance") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  BigReal tol = tenpow(-25);
  for (const auto& i : check_Lodd(c, z, 3, tol)) CHECK(i.passed());
  for (const auto& i : check_residue_identity(c, z, 3, tol)) CHECK(i.passed());
  for (const auto& i : check_l_plus_even(c, z, 4, tol)) CHECK(i.passed());
  CheckItem bad{"x", {}, BigReal(1L), BigReal(0L), BigReal(0.5)};
  CHECK_FALSE(bad.passed());
  CHECK(bad.status() == "fail");
  bad.report_only = true;
  CHECK(bad.passed());
  CHECK(to_json(bad)["status"] == "report-only");
  CHECK(to_json(bad)["tolerance"] == "5.0e-1");
  CheckItem p{"y", {}, BigReal(0L), BigReal(0L), tenpow(-30)};
  CHECK(to_json(p)["tolerance"] == "1e-30");
}

TEST_CASE("symmetry conjecture is report-only") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  auto items = check_symmetry_conjecture(c, z, 2, tenpow(-25));
  REQUIRE(items.size() == 4);
  for (const auto& i : items) CHECK(i.status() == "report-only");
  CHECK(items[0].discrepancy < tenpow(-30));
}

TEST_CASE("direct sums agree with the continuation") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  for (const auto& i : check_brute_force(c, z, tenpow(-12), 20000)) CHECK(i.passed());
}

TEST_CASE("integrality of the exact recursion") {
  auto r = check_integrality(60);
  CHECK(r.first_failure == -1);
  REQUIRE(r.u.size() == 61);
  CHECK(r.u[1].coeff(0, 1) == -2);
  CHECK(r.u[1].coeff(0, 0) == 0);
  auto item = integrality_item(r);
  CHECK(item.report_only);
  CHECK(item.discrepancy.is_zero());
}

TEST_CASE("l_plus_even_from_phi matches the continuation") {
  const HBConstants& c = c40();
  const ZeroModel& z = z40();
  auto v = l_plus_even_from_phi(c, 3);
  PrecisionScope s(c.working_digits);
  for (int k = 1; k <= 3; ++k) {
    auto l = l_series(c, z, LKind::plus, BigReal(2L * k));
    CHECK(abs(l.value - v[k - 1]) <= l.error_bound);
  }
}
