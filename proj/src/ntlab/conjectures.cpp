#include "hb/ntlab.hpp"

#include <cmath>
#include <stdexcept>

namespace hb {

std::string CheckItem::status() const {
  if (report_only) return "report-only";
  return passed() ? "pass" : "fail";
}

namespace {

std::string power_str(const BigReal& t, int digits = 2) {
  if (t.sign() > 0) {
    long e = std::lround(log10(t).to_double());
    if (abs(t / tenpow(e) - 1L) < tenpow(-10)) return "1e" + std::to_string(e);
  }
  return t.sci(digits);
}

}  // namespace

nlohmann::json to_json(const CheckItem& item, int digits) {
  return {{"check", item.check},
          {"parameters", item.parameters.is_null() ? nlohmann::json::object() : item.parameters},
          {"discrepancy", item.discrepancy.sci(digits)},
          {"certified_bound", power_str(item.bound, digits)},
          {"tolerance", power_str(item.tolerance)},
          {"status", item.status()}};
}

namespace {

LSeriesValue eval(const HBConstants& c, const ZeroModel& z, LKind kind, long s, const LSeriesOptions& o = {}) {
  return l_series(c, z, kind, BigReal(s), o);
}

BigReal two_pi_C_pow(const HBConstants& c, int e) {
  return pow(2L * BigReal::pi() * c.C, static_cast<long>(e));
}

}  // namespace

std::vector<CheckItem> check_Lodd(const HBConstants& c, const ZeroModel& zeros, int m_max, const BigReal& tol) {
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  auto v = eval(c, zeros, LKind::minus, -1);
  out.push_back({"L_-(-1) = -1/(4C)", {{"s", -1}}, abs(v.value + 1L / (4L * c.C)), v.error_bound, tol});
  for (int m = 1; m <= m_max; ++m) {
    long s = -1 - 2L * m;
    auto w = eval(c, zeros, LKind::minus, s);
    out.push_back({"L_-(" + std::to_string(s) + ") = 0", {{"s", s}}, abs(w.value), w.error_bound, tol});
  }
  auto z0 = eval(c, zeros, LKind::minus, 0);
  CheckItem r{"L_-(0) value", {{"s", 0}, {"value", z0.value.str(30)}}, abs(z0.value), z0.error_bound, tol};
  r.report_only = true;
  out.push_back(r);
  return out;
}

std::vector<CheckItem> check_residue_identity(const HBConstants& c, const ZeroModel& zeros, int k_max,
                                              const BigReal& tol) {
  auto Lm = L_minus_odd(c, k_max);
  PrecisionScope scope(c.working_digits);
  BigReal pi = BigReal::pi();
  std::vector<CheckItem> out;
  for (int k = 1; k <= k_max; ++k) {
    long s = 1 - 2L * k;
    auto v = eval(c, zeros, LKind::plus, s);
    if (!v.is_pole) throw std::runtime_error("continuation did not flag the pole at s = " + std::to_string(s));
    // (2i/pi) L_-(2k-1) / (2 pi i C)^{2k-1} reduced to a real number
    BigReal rhs = 2L * Lm[static_cast<size_t>(k - 1)] / (pi * two_pi_C_pow(c, 2 * k - 1));
    if (k % 2 == 0) rhs = -rhs;
    out.push_back({"res L_+ at s = " + std::to_string(s),
                   {{"k", k}, {"residue", v.residue.str(30)}, {"rhs", rhs.str(30)}},
                   abs(v.residue - rhs),
                   v.error_bound,
                   tol});
  }
  return out;
}

std::vector<CheckItem> check_symmetry_conjecture(const HBConstants& c, const ZeroModel& zeros, int k_max,
                                                 const BigReal& tol) {
  LSeriesOptions base;
  LSeriesOptions doubled = base;
  doubled.J = 2 * base.J;
  if (zeros.M < doubled.J - 1) throw std::invalid_argument("symmetry check needs a zero model of order >= 2J - 1");
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  for (int k = 1; k <= k_max; ++k) {
    BigReal d[2], b[2];
    const LSeriesOptions* opts[2] = {&base, &doubled};
    for (int i = 0; i < 2; ++i) {
      auto neg = eval(c, zeros, LKind::plus, -2L * k, *opts[i]);
      auto pos = eval(c, zeros, LKind::plus, 2L * k, *opts[i]);
      BigReal rhs = pos.value / two_pi_C_pow(c, 2 * k);
      if (k % 2) rhs = -rhs;
      d[i] = abs(neg.value - rhs);
      b[i] = neg.error_bound + pos.error_bound / two_pi_C_pow(c, 2 * k);
    }
    CheckItem item{"L_+(-2k) = L_+(2k)/(2 pi i C)^{2k}",
                   {{"k", k}, {"J", base.J}, {"discrepancy_2J", d[1].sci(6)}},
                   d[0],
                   b[0],
                   tol};
    item.report_only = true;
    out.push_back(item);
    CheckItem stab{"symmetry discrepancy stable under J -> 2J", {{"k", k}}, abs(d[0] - d[1]), b[0] + b[1], tol};
    stab.report_only = true;
    out.push_back(stab);
  }
  return out;
}

std::vector<CheckItem> check_l_plus_even(const HBConstants& c, const ZeroModel& zeros, int k_max, const BigReal& tol) {
  auto from_phi = l_plus_even_from_phi(c, k_max);
  auto Lm = L_minus_odd(c, 1);
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  auto two = eval(c, zeros, LKind::plus, 2);
  auto lm1 = eval(c, zeros, LKind::minus, 1);
  out.push_back({"L_+(2) = -4 C L_-(1)", {{"L_plus_2", two.value.str(30)}}, abs(two.value + 4L * c.C * lm1.value),
                 two.error_bound + 4L * c.C * lm1.error_bound, tol});
  out.push_back({"L_-(1) = L_tau(1)", {{"L_minus_1", lm1.value.str(30)}}, abs(lm1.value - c.L1), lm1.error_bound, tol});
  out.push_back({"L_-(1) from phi = L_tau(1)", {}, abs(Lm[0] - c.L1), tenpow(-(c.working_digits - 10)), tol});
  for (int k = 1; k <= k_max; ++k) {
    auto v = eval(c, zeros, LKind::plus, 2L * k);
    out.push_back({"L_+(2k) from log phi", {{"k", k}, {"value", v.value.str(30)}},
                   abs(v.value - from_phi[static_cast<size_t>(k - 1)]), v.error_bound, tol});
  }
  return out;
}

std::vector<CheckItem> check_brute_force(const HBConstants& c, const ZeroModel& zeros, const BigReal& tol, int N) {
  std::vector<int> ss{2, 3, 4, 5};
  auto bf = brute_force_l(zeros, ss, N);
  PrecisionScope scope(c.working_digits);
  std::vector<CheckItem> out;
  for (const auto& b : bf) {
    auto v = l_series(c, zeros, b.kind, b.s);
    std::string name = b.kind == LKind::plus ? "L_+" : "L_-";
    out.push_back({name + " continuation vs direct sum", {{"s", b.s.to_long()}, {"N", N}}, abs(v.value - b.value),
                   v.error_bound, tol});
  }
  return out;
}

IntegralityReport check_integrality(int n_max) {
  IntegralityReport r;
  r.n_max = n_max;
  ExactPolynomial prev;  // u_{-1} = 0
  ExactPolynomial cur = ExactPolynomial::constant(1);
  ExactPolynomial b2 = ExactPolynomial::b2(), lam = ExactPolynomial::lambda();
  r.u.push_back(cur);
  for (int n = 0; n < n_max; ++n) {
    ExactPolynomial shift = ExactPolynomial::constant(mpq_class(n) * (n + 1)) - lam;
    ExactPolynomial next = cur * shift * mpq_class(4 * n + 2, n + 1);
    if (n > 0) next += b2 * prev * mpq_class(4 * n, n + 1);
    prev = std::move(cur);
    cur = std::move(next);
    r.u.push_back(cur);
    if (r.first_failure < 0 && !cur.has_integer_coefficients()) r.first_failure = n + 1;
  }
  return r;
}

CheckItem integrality_item(const IntegralityReport& r) {
  CheckItem item{"u_n in Z[b, lambda]",
                 {{"n_max", r.n_max}, {"first_non_integer", r.first_failure}},
                 BigReal(r.first_failure < 0 ? 0L : 1L),
                 BigReal(0L),
                 BigReal(0L)};
  item.report_only = true;
  return item;
}

}  // namespace hb
