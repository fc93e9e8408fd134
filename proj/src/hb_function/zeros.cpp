#include "hb/hb_function.hpp"
#include "hb/special.hpp"

#include <cmath>
#include <sstream>

namespace hb {

std::vector<BigReal> L_minus_odd_from(const std::vector<BigReal>& u, const BigReal& C, int M) {
  if (static_cast<int>(u.size()) <= M) throw std::invalid_argument("L_minus_odd_from needs u_1..u_M");
  std::vector<BigReal> L(static_cast<size_t>(M + 1), BigReal(0L));
  BigReal c4 = 4L * C;
  for (int j = 1; j <= M; ++j) {
    BigReal v = u[static_cast<size_t>(j)] / c4;
    for (int k = 1; k < j; ++k) v -= u[static_cast<size_t>(k)] * L[static_cast<size_t>(j - k)];
    L[static_cast<size_t>(j)] = v;
  }
  L.erase(L.begin());
  return L;
}

std::vector<BigReal> L_minus_odd(const HBConstants& c, int M) {
  TaylorModel phi = taylor_phi_stable(c, M);
  PrecisionScope scope(c.working_digits);
  std::vector<BigReal> u;
  for (int n = 0; n <= M; ++n) u.push_back(phi.coeffs[2 * n]);
  return L_minus_odd_from(u, c.C, M);
}

std::vector<BigReal> rho_coefficients(const HBConstants& c, int M) {
  int K = (M + 1) / 2;
  auto L = L_minus_odd(c, std::max(K, 1));
  PrecisionScope scope(c.working_digits);
  BigReal pi = BigReal::pi();
  // H(z) = 1/(2C z) + sum_m 2 L_-(2m-1) z^{2m-1} / (2m-1)
  std::vector<BigReal> h(static_cast<size_t>(2 * K + 1), BigReal(0L));
  h[0] = 1L / (2L * c.C);
  for (int m = 1; m <= K; ++m)
    h[static_cast<size_t>(2 * m)] = 2L * L[static_cast<size_t>(m - 1)] / static_cast<long>(2 * m - 1);
  Series H(-1, h, Parity::odd, 2 * K - 1);
  std::vector<BigReal> a(static_cast<size_t>(M + 1), BigReal(0L));
  BigReal tol = tenpow(-(c.working_digits - 10));
  BigReal pipow = pi;
  BigReal twoC = 2L * c.C;
  for (int m = 1; m <= M; ++m) {
    pipow *= pi;
    if (m % 2 == 0) continue;
    Series Hm = series_pow(H, m, 1);
    BigReal v = Hm[1] / (twoC * pipow * static_cast<long>(m));
    if (((m + 1) / 2) % 2 == 1) v = -v;
    if (v.sign() < 0 && abs(v) > tol) throw std::runtime_error("negative rho coefficient a_" + std::to_string(m));
    a[static_cast<size_t>(m)] = v;
  }
  return a;
}

BigReal ZeroModel::rho(const BigReal& x) const {
  BigReal s(0L);
  for (size_t m = rho_coeffs.size(); m-- > 0;) s = s * x + rho_coeffs[m];
  return s;
}

BigReal ZeroModel::series_tau(int n) const {
  BigReal h = BigReal(static_cast<long>(n)) + BigReal(0.5);
  return h - rho(1L / h);
}

BigReal ZeroModel::tail_bound(int n) const {
  BigReal x = 1L / (BigReal(static_cast<long>(n)) + BigReal(0.5));
  return abs(gap) * pow(x / 2L, static_cast<long>(M + 1));
}

BigReal ZeroModel::tau(int n) const {
  if (n >= 1 && n <= static_cast<int>(refined.size()) && n <= n0) return refined[static_cast<size_t>(n - 1)];
  return series_tau(n);
}

BigReal ZeroModel::signed_zero(int n) const { return n % 2 ? tau(n) : -tau(n); }

int default_rho_order(int digits) {
  int M = std::max(61, digits + 11);
  return M % 2 ? M : M + 1;
}

ZeroModel build_zero_model(const HBConstants& c, int M, int n0) {
  ZeroModel z;
  z.M = M > 0 ? M : default_rho_order(c.digits_certified);
  z.working_digits = c.working_digits;
  z.rho_coeffs = rho_coefficients(c, z.M);
  {
    PrecisionScope scope(c.working_digits);
    BigReal s(0L), p(1L);
    for (int m = 1; m <= z.M; ++m) {
      p *= 2L;
      s += z.rho_coeffs[static_cast<size_t>(m)] * p;
    }
    z.gap = BigReal(0.5) - s;
  }
  if (n0 < 0) {
    PrecisionScope scope(c.working_digits);
    BigReal target = tenpow(-c.digits_certified);
    int n = 1;
    while (n < 1000 && !(z.tail_bound(n) < target)) ++n;
    n0 = std::max(n, 8);
  }
  z.n0 = n0;
  if (n0 > 0) z.refined = refine_zeros_newton(c, z, n0);
  return z;
}

std::vector<BigReal> refine_zeros_newton(const HBConstants& c, const ZeroModel& model, int n0) {
  PrecisionScope scope(c.working_digits);
  BigReal R = model.series_tau(n0) + 1L;
  int T = taylor_order_for_radius(R, c.working_digits + 10);
  TaylorModel t = taylor_Phi_stable(c, T);
  Series d = t.coeffs.derivative();
  BigReal eps = tenpow(-(c.working_digits - 5));
  std::vector<BigReal> out;
  for (int n = 1; n <= n0; ++n) {
    BigReal sgn(n % 2 ? 1L : -1L);
    BigReal z = model.series_tau(n);
    bool done = false;
    for (int it = 0; it < 60; ++it) {
      BigReal x = sgn * z;
      BigReal dz = t.coeffs.eval(x) / (sgn * d.eval(x));
      z -= dz;
      if (abs(dz) < eps * z) {
        done = true;
        break;
      }
    }
    if (!done || abs(z - model.series_tau(n)) > BigReal(0.25))
      throw std::runtime_error("Newton refinement of tau_" + std::to_string(n) + " did not converge");
    out.push_back(z);
  }
  return out;
}

std::vector<BigReal> refine_zeros_newton(const HBConstants& c, int n0) {
  ZeroModel m;
  m.M = default_rho_order(c.digits_certified);
  m.rho_coeffs = rho_coefficients(c, m.M);
  return refine_zeros_newton(c, m, n0);
}

std::vector<BigReal> expansion_E(const std::vector<BigReal>& rho_coeffs, const BigReal& s, int J) {
  // x rho(x) through x^J
  std::vector<BigReal> f(static_cast<size_t>(J + 1), BigReal(0L));
  for (int j = 2; j <= J; ++j)
    if (j - 1 < static_cast<int>(rho_coeffs.size())) f[static_cast<size_t>(j)] = -rho_coeffs[static_cast<size_t>(j - 1)];
  Series g = series_log1p(Series(0, f, Parity::none, J), J);
  Series e = series_exp(g.scaled(-s), J);
  std::vector<BigReal> out;
  for (int j = 0; j <= J; ++j) out.push_back(e[j]);
  return out;
}

BigReal half_integer_tail(const BigReal& t, int n1) {
  return hurwitz_zeta(t, BigReal(static_cast<long>(n1)) + BigReal(1.5));
}

BigReal alternating_half_integer_tail(const BigReal& t, int n1) {
  BigReal q1 = (BigReal(static_cast<long>(n1)) + BigReal(1.5)) / 2L;
  BigReal q2 = (BigReal(static_cast<long>(n1)) + BigReal(2.5)) / 2L;
  BigReal v = t == BigReal(1L) ? (digamma(q2) - digamma(q1)) / 2L
                               : pow(BigReal(2L), -t) * (hurwitz_zeta(t, q1) - hurwitz_zeta(t, q2));
  return (n1 + 1) % 2 ? -v : v;
}

namespace {

// sum_{m>N} (-1)^m tau_m^{-s} through the expansion E_s
BigReal alternating_tau_tail(const ZeroModel& model, long s, int N, const BigReal& eps) {
  BigReal x = 1L / (BigReal(static_cast<long>(N)) + BigReal(1.5));
  int J = 2;
  while (J < 400 && pow(x, static_cast<long>(J)) > eps) J += 2;
  auto e = expansion_E(model.rho_coeffs, BigReal(s), J);
  BigReal sum(0L);
  for (int j = 0; j <= J; j += 2) sum += e[static_cast<size_t>(j)] * alternating_half_integer_tail(BigReal(s + j), N);
  return sum;
}

}  // namespace

std::vector<BigReal> zero_map(const HBConstants& c, const std::vector<BigReal>& zeros, const ZeroModel& tail_model) {
  PrecisionScope scope(c.working_digits);
  BigReal pi = BigReal::pi();
  BigReal k = 1L / (2L * pi * c.C);
  int Nz = static_cast<int>(zeros.size());
  BigReal eps = tenpow(-(c.working_digits + 2));
  // T_j = sum_{m>Nz} (-1)^{m+1} tau_m^{-(2j+1)}
  BigReal y = k / (BigReal(static_cast<long>(Nz)) + BigReal(0.5));
  std::vector<BigReal> Tj;
  BigReal ypow = y;
  for (int j = 0; j < 200 && ypow > eps; ++j) {
    Tj.push_back(-alternating_tau_tail(tail_model, 2 * j + 1, Nz, eps));
    ypow *= y * y;
  }
  std::vector<BigReal> out;
  for (int n = 1; n <= Nz; ++n) {
    const BigReal& tn = zeros[static_cast<size_t>(n - 1)];
    BigReal s(0L);
    for (int m = 1; m <= Nz; ++m) {
      BigReal v = atan(k / (tn * zeros[static_cast<size_t>(m - 1)]));
      if (m % 2) s += v;
      else s -= v;
    }
    BigReal xn = k / tn, xp = xn, x2 = xn * xn;
    for (size_t j = 0; j < Tj.size(); ++j) {
      BigReal t = xp * Tj[j] / static_cast<long>(2 * j + 1);
      if (j % 2) s -= t;
      else s += t;
      xp *= x2;
    }
    out.push_back(BigReal(static_cast<long>(n)) + BigReal(0.5) - 2L * s / pi);
  }
  return out;
}

FixedPointResult refine_zeros_fixed_point(const HBConstants& c, const std::vector<BigReal>& zeros, int sweeps,
                                          const ZeroModel& tail_model) {
  FixedPointResult r;
  r.zeros = zeros;
  PrecisionScope scope(c.working_digits);
  for (int s = 0; s < sweeps; ++s) {
    auto next = zero_map(c, r.zeros, tail_model);
    BigReal norm(0L);
    for (size_t i = 0; i < next.size(); ++i) norm += abs(next[i] - r.zeros[i]);
    if (!r.update_norms.empty() && !r.update_norms.back().is_zero())
      r.contraction.push_back(norm / r.update_norms.back());
    r.update_norms.push_back(norm);
    r.zeros = std::move(next);
  }
  return r;
}

BigReal zero_identity_residual(const HBConstants& c, const ZeroModel& model, int n, int explicit_count) {
  PrecisionScope scope(c.working_digits);
  std::vector<BigReal> z;
  for (int m = 1; m <= explicit_count; ++m) z.push_back(model.tau(m));
  auto mapped = zero_map(c, z, model);
  return abs(mapped[static_cast<size_t>(n - 1)] - z[static_cast<size_t>(n - 1)]);
}

BigReal C_alternating(const HBConstants& c, const ZeroModel& model, BigReal* bound) {
  PrecisionScope scope(c.working_digits);
  const int Ne = 60;
  BigReal s(0L);
  for (int n = 1; n <= Ne; ++n) {
    BigReal d = BigReal(static_cast<long>(n)) + BigReal(0.5) - model.tau(n);
    if (n % 2) s -= d;
    else s += d;
  }
  for (int m = 1; m <= model.M; m += 2)
    s += model.rho_coeffs[static_cast<size_t>(m)] * alternating_half_integer_tail(BigReal(static_cast<long>(m)), Ne);
  BigReal inv = 2L + 4L * s;
  BigReal C = 1L / inv;
  if (bound) {
    // truncation of rho beyond M over n > Ne, plus precision floor
    BigReal t = 4L * model.tail_bound(Ne + 1) * C * C;
    *bound = t + tenpow(-(c.working_digits - 10));
  }
  return C;
}

BigReal C_wallis(const ZeroModel& model, int n_max, BigReal* estimate) {
  std::vector<int> ns;
  for (int n = n_max; n >= 64 && ns.size() < 5; n /= 2) ns.push_back(n);
  std::vector<BigReal> P(ns.size());
  BigReal prod(0.5);
  int k = 1;
  for (int idx = static_cast<int>(ns.size()) - 1; idx >= 0; --idx) {
    for (; k <= ns[static_cast<size_t>(idx)]; ++k) {
      BigReal t = model.tau(k);
      prod *= t * t / (BigReal(static_cast<long>(k)) * static_cast<long>(k + 1));
    }
    P[static_cast<size_t>(idx)] = prod;
  }
  // Neville extrapolation to h = 1/n -> 0
  size_t m = ns.size();
  std::vector<BigReal> h(m);
  for (size_t i = 0; i < m; ++i) h[i] = 1L / BigReal(static_cast<long>(ns[i]));
  std::vector<BigReal> T = P;
  BigReal prev = T[0];
  for (size_t lvl = 1; lvl < m; ++lvl) {
    for (size_t i = 0; i + lvl < m; ++i) T[i] = (h[i + lvl] * T[i] - h[i] * T[i + 1]) / (h[i + lvl] - h[i]);
    if (lvl + 1 == m) {
      if (estimate) *estimate = abs(T[0] - prev);
    }
    prev = T[0];
  }
  return T[0];
}

std::string zeros_csv(const ZeroModel& model, int count, int digits) {
  std::ostringstream os;
  os << "n,tau_n,method\n";
  for (int n = 1; n <= count; ++n)
    os << n << ',' << model.tau(n).str(digits) << ','
       << (n <= model.n0 && n <= static_cast<int>(model.refined.size()) ? "newton" : "series") << '\n';
  return os.str();
}

}  // namespace hb
