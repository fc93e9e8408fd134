#include "hb/hb_function.hpp"

#include <algorithm>
#include <cmath>

namespace hb {

std::vector<Complex> circle_points(const BigReal& radius, int count, const BigReal& phase) {
  std::vector<Complex> out;
  BigReal two_pi = 2L * BigReal::pi();
  for (int k = 0; k < count; ++k) out.push_back(Complex::polar(radius, phase + two_pi * static_cast<long>(k) / static_cast<long>(count)));
  return out;
}

namespace {

BigReal max_radius(const std::vector<Complex>& pts) {
  BigReal r(0L);
  for (const auto& z : pts) r = max(r, z.abs());
  return r;
}

BigReal min_radius(const std::vector<Complex>& pts) {
  BigReal r = max_radius(pts);
  for (const auto& z : pts) r = min(r, z.abs());
  return r;
}

TaylorModel Phi_for_radius(const HBConstants& c, const BigReal& R) {
  int T = taylor_order_for_radius(R, c.working_digits + 10);
  return taylor_Phi_stable(c, T);
}

void track(Residual& r, const BigReal& v, const Complex& z) {
  if (v > r.max_abs || r.max_abs.is_zero()) {
    r.max_abs = v;
    r.at_abs = z.abs();
  }
}

Complex kappa_plus(const HBConstants& c) {
  BigReal pi = BigReal::pi();
  return Complex::polar(1L / sqrt(4L * pi * c.C), pi / 4L);
}

Complex kappa_minus(const HBConstants& c) { return kappa_plus(c).conj(); }

// ia/(2bz) for the Phi system, i.e. i/(2 pi C z)
Complex reflected_point(const HBConstants& c, const Complex& z) {
  return Complex::i() / (2L * BigReal::pi() * c.C * z);
}

Complex functional_rhs(const HBConstants& c, const Series& s, const Complex& z, const Complex& kp, const Complex& km) {
  BigReal b = BigReal::pi() / 2L;
  Complex w = reflected_point(c, z);
  Complex ibz = Complex::i() * z * b;
  return kp * exp(-ibz) * s.eval(w) + km * exp(ibz) * s.eval(-w);
}

Complex functional_lhs(const HBConstants& c, const Series& s, const Complex& z) {
  Complex e = exp(Complex(1L / (4L * c.C)) / z);
  return z * e * s.eval(z);
}

}  // namespace

Residual check_ode_residual(const HBConstants& c, const std::vector<Complex>& points) {
  TaylorModel t = Phi_for_radius(c, max_radius(points));
  PrecisionScope scope(c.working_digits);
  Series d1 = t.coeffs.derivative(), d2 = d1.derivative();
  BigReal a = t.a, b2 = t.b * t.b;
  Residual r{BigReal(0L), BigReal(0L)};
  for (const auto& z : points) {
    Complex f = t.coeffs.eval(z), f1 = d1.eval(z), f2 = d2.eval(z);
    Complex z2 = z * z;
    Complex res = z2 * f2 + (2L * z - Complex(a)) * f1 + (b2 * z2 - Complex(t.lambda)) * f;
    track(r, res.abs(), z);
  }
  return r;
}

Residual check_third_order_residual(const HBConstants& c, const std::vector<Complex>& points) {
  BigReal R = max_radius(points);
  int T = std::min(c.N, taylor_order_for_radius(2L * R, c.working_digits + 10) / 2 + 1);
  TaylorModel t = taylor_phi_stable(c, T);
  PrecisionScope scope(c.working_digits);
  Series d1 = t.coeffs.derivative(), d2 = d1.derivative(), d3 = d2.derivative();
  BigReal pi2 = BigReal::pi() * BigReal::pi();
  BigReal C = c.C, L = c.L1;
  Residual r{BigReal(0L), BigReal(0L)};
  for (const auto& z : points) {
    Complex f = t.coeffs.eval(z), f1 = d1.eval(z), f2 = d2.eval(z), f3 = d3.eval(z);
    Complex iz = Complex(BigReal(1L)) / z;
    Complex iz2 = iz * iz;
    Complex c1 = Complex(pi2) + iz2 * ((6L * C + 2L * L) / C) - iz2 * iz2 / (4L * C * C);
    Complex c0 = iz * (2L * pi2) + iz2 * iz * (2L * L / C);
    Complex res = f3 + iz * 6L * f2 + c1 * f1 + c0 * f;
    track(r, res.abs(), z);
  }
  return r;
}

Residual check_quadratic_relation(const HBConstants& c, const std::vector<Complex>& points) {
  TaylorModel t = Phi_for_radius(c, max_radius(points));
  PrecisionScope scope(c.working_digits);
  Series d1 = t.coeffs.derivative();
  BigReal k = 1L / (2L * c.C);
  Residual r{BigReal(0L), BigReal(0L)};
  for (const auto& z : points) {
    Complex fp = t.coeffs.eval(z), fm = t.coeffs.eval(-z);
    Complex dp = d1.eval(z), dm = d1.eval(-z);
    Complex res = z * z * (dp * fm + dm * fp) - fp * fm * k + Complex(k);
    track(r, res.abs(), z);
  }
  return r;
}

Residual check_functional_equation(const HBConstants& c, const std::vector<Complex>& points) {
  BigReal R;
  {
    PrecisionScope scope(c.working_digits);
    R = max(max_radius(points), 1L / (2L * BigReal::pi() * c.C * min_radius(points)));
  }
  TaylorModel t = Phi_for_radius(c, R);
  PrecisionScope scope(c.working_digits);
  Complex kp = kappa_plus(c), km = kappa_minus(c);
  Residual r{BigReal(0L), BigReal(0L)};
  for (const auto& z : points) {
    Complex res = functional_lhs(c, t.coeffs, z) - functional_rhs(c, t.coeffs, z, kp, km);
    track(r, res.abs(), z);
  }
  return r;
}

BigReal check_crucial_identity(const HBConstants& c, const ZeroModel& model, int n) {
  BigReal tn;
  {
    PrecisionScope scope(c.working_digits);
    tn = model.tau(n);
  }
  TaylorModel t = Phi_for_radius(c, tn + 1L);
  PrecisionScope scope(c.working_digits);
  Series d1 = t.coeffs.derivative(), d2 = d1.derivative();
  BigReal s = n % 2 ? tn : -tn;
  BigReal sgn(n % 2 ? -1L : 1L);
  BigReal lhs = tn * tn * d2.eval(s);
  BigReal rhs = (2L * sgn * tn + 1L / (2L * c.C)) * d1.eval(s);
  return abs(lhs - rhs);
}

KappaPair fit_kappa(const HBConstants& c, const Complex& z1, const Complex& z2) {
  BigReal R;
  {
    PrecisionScope scope(c.working_digits);
    R = max(max(z1.abs(), z2.abs()),
            max(1L / (2L * BigReal::pi() * c.C * z1.abs()), 1L / (2L * BigReal::pi() * c.C * z2.abs())));
  }
  TaylorModel t = Phi_for_radius(c, R);
  PrecisionScope scope(c.working_digits);
  Complex one(BigReal(1L)), zero(BigReal(0L));
  Complex A1 = functional_rhs(c, t.coeffs, z1, one, zero), B1 = functional_rhs(c, t.coeffs, z1, zero, one);
  Complex A2 = functional_rhs(c, t.coeffs, z2, one, zero), B2 = functional_rhs(c, t.coeffs, z2, zero, one);
  Complex r1 = functional_lhs(c, t.coeffs, z1), r2 = functional_lhs(c, t.coeffs, z2);
  Complex det = A1 * B2 - A2 * B1;
  return {(r1 * B2 - r2 * B1) / det, (A1 * r2 - A2 * r1) / det};
}

Complex Phi_reflected(const HBConstants& c, const TaylorModel& small, const Complex& z) {
  PrecisionScope scope(c.working_digits);
  Complex rhs = functional_rhs(c, small.coeffs, z, kappa_plus(c), kappa_minus(c));
  Complex e = exp(-(Complex(1L / (4L * c.C)) / z));
  return e * rhs / z;
}

TestFunction sinc_power_test_function() {
  TestFunction t;
  t.f = [](const BigReal& x) {
    if (x.is_zero()) return BigReal(0L);
    BigReal y = BigReal::pi() * x / 5L;
    return x * pow(sin(y) / y, 5L);
  };
  t.derivative_at_zero = BigReal(1L);
  t.decay_constant = pow(5L / BigReal::pi(), 5L);
  t.decay_power = 4;
  t.odd = true;
  return t;
}

SummationResult summation_check(const TestFunction& f, const BigReal& a_param, const std::vector<BigReal>& zeros) {
  if (f.decay_power < 2) throw std::invalid_argument("summation_check needs decay faster than |x|^-1 for a certified tail");
  std::vector<BigReal> pos, neg;
  for (const auto& z : zeros) (z.sign() > 0 ? pos : neg).push_back(abs(z));
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  if (pos.size() < 2 || neg.size() < 2) throw std::invalid_argument("summation_check needs zeros on both sides");
  std::vector<BigReal> terms;
  terms.reserve(zeros.size());
  for (const auto& z : zeros) terms.push_back(f.f(z) - f.f(-z));
  std::sort(terms.begin(), terms.end(), [](const BigReal& x, const BigReal& y) { return abs(x) < abs(y); });
  BigReal sum(0L);
  for (const auto& t : terms) sum += t;
  SummationResult r;
  r.discrepancy = abs(a_param * f.derivative_at_zero - sum);
  r.zeros_used = static_cast<int>(zeros.size());
  BigReal tail(0L);
  for (const auto* side : {&pos, &neg}) {
    const auto& v = *side;
    BigReal R = v.back();
    BigReal d = (v.back() - v[v.size() - 2]) * BigReal(0.9);
    long p = f.decay_power;
    tail += 2L * f.decay_constant * (pow(R, -p) + pow(R, 1 - p) / (d * (p - 1)));
  }
  r.tail_bound = tail;
  return r;
}

}  // namespace hb
