#include "hb/ntlab.hpp"
#include "hb/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hb {

namespace {

bool is_integer(const BigReal& s) { return floor(s) == s; }

// rigorous bound on sum_{j > J, j even} e_j(s) Tail(s + j): with a_m >= 0 and
// sum a_m 2^m <= 1/2, |x rho(x)| <= 1/3 on |x| <= 1, so |e_j(s)| <= 1.5^|s|
BigReal truncation_bound(const BigReal& s, int J, int n1) {
  BigReal x0 = 1L / (BigReal(static_cast<long>(n1)) + BigReal(1.5));
  BigReal sum(0L);
  for (int j = J + 2; j <= J + 400; j += 2) {
    BigReal t = s + static_cast<long>(j);
    BigReal term = pow(x0, t) * (1L + 1L / (x0 * (t - 1L)));
    sum += term;
    if (term < sum * tenpow(-6)) break;
  }
  return pow(BigReal(1.5), abs(s)) * sum;
}

}  // namespace

LSeriesValue l_series(const HBConstants& c, const ZeroModel& zeros, LKind kind, const BigReal& s_in,
                      const LSeriesOptions& opts) {
  if (zeros.M < opts.J - 1) throw std::invalid_argument("l_series: zero model order M below the expansion order J");
  PrecisionScope scope(c.working_digits);
  BigReal s = s_in.rounded();
  LSeriesValue r;
  r.s = s;
  r.kind = kind;
  r.value = BigReal(0L);
  r.residue = BigReal(0L);
  int pole_j = -1;
  if (kind == LKind::plus && is_integer(s) && s <= BigReal(1L)) {
    long j = 1 - s.to_long();
    if (j % 2 == 0 && j <= opts.J) pole_j = static_cast<int>(j);
  }
  auto e = expansion_E(zeros.rho_coeffs, s, opts.J);
  if (pole_j >= 0) {
    r.is_pole = true;
    r.residue = e[static_cast<size_t>(pole_j)];
    r.error_bound = tenpow(-(c.working_digits - 10)) * max(BigReal(1L), abs(r.residue));
    return r;
  }
  BigReal v(0L);
  for (int n = 1; n <= opts.n1; ++n) {
    BigReal t = pow(zeros.tau(n), -s);
    if (kind == LKind::minus && n % 2) v -= t;
    else v += t;
  }
  for (int j = 0; j <= opts.J; j += 2) {
    BigReal t = s + static_cast<long>(j);
    BigReal tail = kind == LKind::plus ? half_integer_tail(t, opts.n1) : alternating_half_integer_tail(t, opts.n1);
    v += e[static_cast<size_t>(j)] * tail;
  }
  r.value = v;
  r.error_bound = truncation_bound(s, opts.J, opts.n1) + tenpow(-(c.working_digits - 10)) * max(BigReal(1L), abs(v));
  return r;
}

std::vector<BigReal> l_plus_even_from_phi(const HBConstants& c, int k_max) {
  TaylorModel phi = taylor_phi_stable(c, k_max);
  PrecisionScope scope(c.working_digits);
  std::vector<BigReal> f(static_cast<size_t>(k_max + 1), BigReal(0L));
  for (int n = 1; n <= k_max; ++n) f[static_cast<size_t>(n)] = phi.coeffs[2 * n];
  Series lg = series_log1p(Series(0, f, Parity::none, k_max), k_max);
  std::vector<BigReal> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(-lg[k] * static_cast<long>(k));
  return out;
}

std::vector<BruteForceValue> brute_force_l(const ZeroModel& zeros, const std::vector<int>& s_values, int N) {
  PrecisionScope scope(std::max(40, std::min(zeros.working_digits, 60)));
  int smax = 0;
  for (int s : s_values) {
    if (s < 2) throw std::invalid_argument("brute_force_l needs s >= 2");
    smax = std::max(smax, s);
  }
  std::vector<BigReal> plus(static_cast<size_t>(smax + 1), BigReal(0L)), minus = plus;
  for (int n = N; n >= 1; --n) {
    BigReal inv = 1L / zeros.tau(n);
    BigReal p = inv;
    for (int s = 1; s <= smax; ++s) {
      plus[static_cast<size_t>(s)] += p;
      if (n % 2) minus[static_cast<size_t>(s)] -= p;
      else minus[static_cast<size_t>(s)] += p;
      p *= inv;
    }
  }
  const int J = 12, K = 5;
  BigReal y = BigReal(static_cast<long>(N)) + BigReal(0.5);
  std::vector<BruteForceValue> out;
  for (int s : s_values) {
    auto e = expansion_E(zeros.rho_coeffs, BigReal(static_cast<long>(s)), J);
    // f(t) = sum_j e_j (t + 1/2)^{-(s+j)}; k-th derivative at t through falling powers
    auto deriv = [&](const BigReal& yy, int k) {
      BigReal d(0L);
      for (int j = 0; j <= J; j += 2) {
        long p = s + j;
        BigReal c = e[static_cast<size_t>(j)];
        for (int i = 0; i < k; ++i) c *= -(p + i);
        d += c * pow(yy, -(p + k));
      }
      return d;
    };
    BigReal integral(0L);
    for (int j = 0; j <= J; j += 2) {
      long p = s + j;
      integral += e[static_cast<size_t>(j)] * pow(y, 1 - p) / (p - 1);
    }
    BigReal tp = integral - deriv(y, 0) / 2L;
    BigReal fact(1L);
    for (int k = 1; k <= K; ++k) {
      fact *= static_cast<long>(2 * k - 1) * (2 * k);
      tp -= BigReal::from_mpq(bernoulli(2 * k).get_mpq_t()) / fact * deriv(y, 2 * k - 1);
    }
    // Boole: sum_{m>=0} (-1)^m f(a+m) = -sum_k (2^{k+1}-1) B_{k+1}/(k+1)! f^(k)(a)
    BigReal ya = y + 1L;
    BigReal tm(0L);
    BigReal kf(1L);
    for (int k = 0; k <= 2 * K + 1; ++k) {
      kf *= static_cast<long>(k + 1);
      mpq_class b = bernoulli(k + 1);
      if (b == 0) continue;
      BigReal coef = -BigReal::from_mpq(b.get_mpq_t()) * (pow(BigReal(2L), static_cast<long>(k + 1)) - 1L) / kf;
      tm += coef * deriv(ya, k);
    }
    if ((N + 1) % 2) tm = -tm;
    out.push_back({BigReal(static_cast<long>(s)), LKind::plus, plus[static_cast<size_t>(s)] + tp});
    out.push_back({BigReal(static_cast<long>(s)), LKind::minus, minus[static_cast<size_t>(s)] + tm});
  }
  return out;
}

}  // namespace hb
