#include "hb/hb_function.hpp"

#include <cmath>

namespace hb {

PhiParameters phi_parameters(const HBConstants& c) {
  return {1L / (2L * c.C), BigReal::pi() / 2L, c.lambda_star};
}

int plan_recursion_digits(int digits, int T, Which which) {
  double lf = std::lgamma(static_cast<double>(T) + 1.0) / std::log(10.0);
  double extra = 0;
  if (which == Which::Phi) {
    extra = 2 * lf + T * std::log10(4 * 0.5409288219 / M_PI);
  } else {
    // parasitic (n!)^2 (4/a^2)^n against u_n ~ (pi/2)^{2n} / (n!)^2, a = 1/(2C)
    double a = 1 / (2 * 0.5409288219);
    extra = 4 * lf + T * std::log10(16 / (a * a * M_PI * M_PI));
  }
  return digits + static_cast<int>(std::ceil(std::max(extra, 0.0))) + 15;
}

int taylor_order_for_radius(const BigReal& R, int digits) {
  double x = M_PI * std::max(R.to_double(), 1e-3) / 2;
  double target = -digits * std::log(10.0);
  for (int T = 1;; ++T) {
    if (T > x && T * std::log(x) - std::lgamma(T + 1.0) < target) return T;
  }
}

int envelope_violation(const std::vector<BigReal>& alpha, const BigReal& K) {
  BigReal h = BigReal::pi() / 2L;
  BigReal env = K;
  for (size_t n = 0; n < alpha.size(); ++n) {
    if (n > 0) env = env * h / static_cast<long>(n);
    BigReal bound = env * static_cast<long>(std::max<size_t>(n * n, 1));
    if (abs(alpha[n]) > bound) return static_cast<int>(n);
  }
  return -1;
}

namespace {

const HBConstants& constants_at(const HBConstants& c, int digits, HBConstants& storage) {
  if (c.working_digits >= digits) return c;
  storage = solve_constants(digits);
  return storage;
}

std::vector<BigReal> rounded_all(const std::vector<BigReal>& v) {
  std::vector<BigReal> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.rounded());
  return out;
}

std::vector<BigReal> Phi_recursion(const PhiParameters& p, int T) {
  std::vector<BigReal> al(static_cast<size_t>(T + 1));
  al[0] = BigReal(1L);
  BigReal b2 = p.b * p.b;
  for (int n = 0; n < T; ++n) {
    auto i = static_cast<size_t>(n);
    BigReal r = (static_cast<long>(n) * (n + 1) - p.lambda) * al[i];
    if (n >= 2) r += b2 * al[i - 2];
    al[i + 1] = r / (p.a * static_cast<long>(n + 1));
  }
  return al;
}

std::vector<BigReal> phi_recursion(const PhiParameters& p, int T) {
  std::vector<BigReal> u(static_cast<size_t>(T + 1));
  u[0] = BigReal(1L);
  BigReal a2 = p.a * p.a, b2 = p.b * p.b;
  for (int n = 0; n < T; ++n) {
    auto i = static_cast<size_t>(n);
    BigReal r = (static_cast<long>(n) * (n + 1) - p.lambda) * u[i];
    if (n >= 1) r += 2L * b2 * static_cast<long>(n) / static_cast<long>(2 * n + 1) * u[i - 1];
    u[i + 1] = r * static_cast<long>(2 * (2 * n + 1)) / (a2 * static_cast<long>(n + 1));
  }
  return u;
}

Series even_series(const std::vector<BigReal>& u) {
  std::vector<BigReal> c(2 * u.size() - 1, BigReal(0L));
  for (size_t n = 0; n < u.size(); ++n) c[2 * n] = u[n];
  return Series(0, std::move(c), Parity::even, static_cast<int>(2 * u.size() - 2));
}

}  // namespace

TaylorModel taylor_Phi(const HBConstants& c, int T) {
  int planned = plan_recursion_digits(c.digits_certified, T, Which::Phi);
  for (int attempt = 0; attempt < 3; ++attempt) {
    HBConstants storage;
    const HBConstants& hc = constants_at(c, planned, storage);
    std::vector<BigReal> al;
    int violation;
    {
      PrecisionScope scope(hc.working_digits);
      al = Phi_recursion(phi_parameters(hc), T);
      violation = envelope_violation(al, BigReal(10L));
    }
    if (violation < 0) {
      PrecisionScope scope(c.working_digits);
      PhiParameters p = phi_parameters(c);
      return {Which::Phi, Series(0, rounded_all(al), Parity::none, T), p.a, p.b, p.lambda, c.working_digits};
    }
    planned += planned / 3 + 10;
  }
  throw PrecisionLoss("Phi recursion left its growth envelope at every planned precision");
}

TaylorModel taylor_Phi_stable(const HBConstants& c, int T) {
  PrecisionScope scope(c.working_digits);
  auto al = phi_eigenfunction(c).taylor(T);
  BigReal h = BigReal::pi() / 2L, p(1L);
  for (auto& v : al) {
    v *= p;
    p *= h;
  }
  PhiParameters pp = phi_parameters(c);
  return {Which::Phi, Series(0, std::move(al), Parity::none, T), pp.a, pp.b, pp.lambda, c.working_digits};
}

TaylorModel taylor_phi_stable(const HBConstants& c, int T) {
  if (T > c.N) throw std::invalid_argument("taylor_phi_stable: T exceeds the Legendre truncation");
  PrecisionScope scope(c.working_digits);
  BigReal h2 = BigReal::pi() * BigReal::pi() / 4L;
  BigReal step = -2L / c.a_star * h2;
  BigReal p(1L);
  std::vector<BigReal> u(static_cast<size_t>(T + 1));
  for (int n = 0; n <= T; ++n) {
    u[static_cast<size_t>(n)] = c.xi[static_cast<size_t>(n)] * p / static_cast<long>(2 * n + 1);
    p *= step;
  }
  PhiParameters pp = phi_parameters(c);
  return {Which::phi, even_series(u), pp.a, pp.b, pp.lambda, c.working_digits};
}

TaylorModel taylor_phi(const HBConstants& c, int T) {
  int planned = plan_recursion_digits(c.digits_certified, T, Which::phi);
  HBConstants storage;
  const HBConstants& hc = constants_at(c, planned, storage);
  std::vector<BigReal> u;
  {
    PrecisionScope scope(hc.working_digits);
    u = phi_recursion(phi_parameters(hc), T);
  }
  PrecisionScope scope(c.working_digits);
  u = rounded_all(u);
  TaylorModel Phi = taylor_Phi_stable(c, 2 * T);
  // Phi(z) Phi(-z) coefficient at z^{2n}
  const auto& al = Phi.coeffs.coeffs();
  BigReal tol = tenpow(-(c.digits_certified - 5));
  for (int n = 0; n <= T; ++n) {
    BigReal v(0L);
    for (int k = 0; k <= 2 * n; ++k) {
      BigReal t = al[static_cast<size_t>(k)] * al[static_cast<size_t>(2 * n - k)];
      if (k % 2) v -= t;
      else v += t;
    }
    BigReal diff = abs(u[static_cast<size_t>(n)] - v);
    if (diff > tol * max(abs(v), tenpow(-3 * c.working_digits)))
      throw PrecisionLoss("phi recursion disagrees with Phi(z)Phi(-z) at n = " + std::to_string(n));
  }
  PhiParameters pp = phi_parameters(c);
  return {Which::phi, even_series(u), pp.a, pp.b, pp.lambda, c.working_digits};
}

}  // namespace hb
