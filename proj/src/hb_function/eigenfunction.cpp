#include "hb/hb_function.hpp"

#include <cmath>

namespace hb {

std::vector<BigReal> spherical_bessel(int n, const BigReal& x_in) {
  std::vector<BigReal> j(static_cast<size_t>(n + 1), BigReal(0L));
  if (x_in.is_zero()) {
    j[0] = BigReal(1L);
    return j;
  }
  BigReal x = abs(x_in);
  BigReal s = sin(x), c = cos(x);
  BigReal j0 = s / x;
  BigReal j1 = s / (x * x) - c / x;
  if (x > BigReal(static_cast<long>(n))) {
    j[0] = j0;
    if (n >= 1) j[1] = j1;
    for (int k = 1; k < n; ++k)
      j[static_cast<size_t>(k + 1)] = (2L * k + 1) * j[static_cast<size_t>(k)] / x - j[static_cast<size_t>(k - 1)];
  } else {
    int start = n + 20 + static_cast<int>(3.5 * PrecisionScope::current_digits());
    BigReal up(0L), cur = tenpow(-30);
    std::vector<BigReal> tmp(static_cast<size_t>(n + 1));
    for (int k = start; k >= 1; --k) {
      BigReal down = (2L * k + 1) * cur / x - up;
      up = std::move(cur);
      cur = std::move(down);
      if (k - 1 <= n) tmp[static_cast<size_t>(k - 1)] = cur;
      if (k <= n) tmp[static_cast<size_t>(k)] = up;
      long e = mpfr_get_exp(cur.raw());
      if (e > 2000) {
        cur = ldexp(cur, -e);
        up = ldexp(up, -e);
        for (int q = k - 1; q <= n; ++q)
          if (q >= 0) tmp[static_cast<size_t>(q)] = ldexp(tmp[static_cast<size_t>(q)], -e);
      }
    }
    BigReal scale = abs(j0) >= abs(j1) || n == 0 ? j0 / tmp[0] : j1 / tmp[1];
    for (int k = 0; k <= n; ++k) j[static_cast<size_t>(k)] = tmp[static_cast<size_t>(k)] * scale;
  }
  if (x_in.sign() < 0)
    for (int k = 1; k <= n; k += 2) j[static_cast<size_t>(k)] = -j[static_cast<size_t>(k)];
  return j;
}

BigReal LegendreEigenfunction::value(const BigReal& x) const {
  int n = static_cast<int>(xi.size()) - 1;
  auto j = spherical_bessel(n, x);
  BigReal s(0L);
  for (int k = n; k >= 0; --k) {
    BigReal t = xi[static_cast<size_t>(k)] * j[static_cast<size_t>(k)];
    if (k % 2) s -= t;
    else s += t;
  }
  return s;
}

BigReal LegendreEigenfunction::derivative(const BigReal& x) const {
  int n = static_cast<int>(xi.size()) - 1;
  if (x.is_zero()) return -xi[1] / 3L;
  auto j = spherical_bessel(n + 1, x);
  BigReal s = xi[0] * -j[1];
  for (int k = 1; k <= n; ++k) {
    auto i = static_cast<size_t>(k);
    BigReal d = j[i - 1] - static_cast<long>(k + 1) * j[i] / x;
    BigReal t = xi[i] * d;
    if (k % 2) s -= t;
    else s += t;
  }
  return s;
}

std::vector<BigReal> LegendreEigenfunction::taylor(int T) const {
  int N = static_cast<int>(xi.size()) - 1;
  // dfact[q] = (2q+1)!!
  std::vector<BigReal> dfact(static_cast<size_t>(T + N + 2));
  dfact[0] = BigReal(1L);
  for (size_t q = 1; q < dfact.size(); ++q) dfact[q] = dfact[q - 1] * static_cast<long>(2 * q + 1);
  // kf[k] = 2^k k!
  std::vector<BigReal> kf(static_cast<size_t>(T / 2 + 2));
  kf[0] = BigReal(1L);
  for (size_t k = 1; k < kf.size(); ++k) kf[k] = kf[k - 1] * static_cast<long>(2 * k);
  std::vector<BigReal> alpha(static_cast<size_t>(T + 1));
  for (int m = 0; m <= T; ++m) {
    BigReal s(0L);
    for (int n = m % 2; n <= std::min(m, N); n += 2) {
      int k = (m - n) / 2;
      BigReal t = xi[static_cast<size_t>(n)] / (kf[static_cast<size_t>(k)] * dfact[static_cast<size_t>(n + k)]);
      if ((n + k) % 2) s -= t;
      else s += t;
    }
    alpha[static_cast<size_t>(m)] = s;
  }
  return alpha;
}

Complex LegendreEigenfunction::endpoint_sum() const {
  BigReal re(0L), im(0L);
  for (size_t n = 0; n < xi.size(); ++n) {
    bool neg = (n / 2) % 2 == 1;
    BigReal& target = n % 2 == 0 ? re : im;
    if (neg) target -= xi[n];
    else target += xi[n];
  }
  return {re, im};
}

LegendreEigenfunction phi_eigenfunction(const HBConstants& c) {
  return {c.xi, c.a_star, c.lambda_star};
}

LegendreEigenfunction ground_eigenfunction(const BigReal& a, int N) {
  EigenPair p = ground_eigenpair(build_matrix(N, a));
  return {p.xi, a, p.lambda};
}

BigReal Phi_real(const LegendreEigenfunction& g, const BigReal& x) { return g.value(BigReal::pi() * x / 2L); }

BigReal Phi_real_derivative(const LegendreEigenfunction& g, const BigReal& x) {
  BigReal h = BigReal::pi() / 2L;
  return h * g.derivative(h * x);
}

namespace {

// arg g(i y) from real Taylor coefficients
BigReal arg_on_imaginary_axis(const std::vector<BigReal>& alpha, const BigReal& y) {
  BigReal re(0L), im(0L), p(1L);
  for (size_t m = 0; m < alpha.size(); ++m) {
    BigReal t = alpha[m] * p;
    switch (m % 4) {
      case 0: re += t; break;
      case 1: im += t; break;
      case 2: re -= t; break;
      default: im -= t; break;
    }
    p *= y;
  }
  return atan2(im, re);
}

}  // namespace

std::vector<BigReal> eigenfunction_zeros(const LegendreEigenfunction& g, int K) {
  BigReal pi = BigReal::pi();
  BigReal argw = g.endpoint_sum().arg();
  int digits = PrecisionScope::current_digits();
  int T = taylor_order_for_radius(BigReal(0.5), digits + 5);
  auto alpha = g.taylor(T);
  BigReal eps = tenpow(-digits + 3);
  std::vector<BigReal> out;
  for (int k = -K; k <= K; ++k) {
    if (k == 0) continue;
    BigReal base = pi * static_cast<long>(k) - argw;
    BigReal mu = base;
    for (int it = 0; it < 200; ++it) {
      BigReal next = base + arg_on_imaginary_axis(alpha, g.a / (2L * mu));
      BigReal d = abs(next - mu);
      mu = std::move(next);
      if (d < eps * (abs(mu) + 1L)) break;
    }
    out.push_back(mu);
  }
  return out;
}

std::vector<BigReal> eigenfunction_real_zeros(const LegendreEigenfunction& g, const BigReal& R, int samples) {
  std::vector<BigReal> out;
  BigReal h = 2L * R / static_cast<long>(samples);
  BigReal x0 = -R;
  BigReal f0 = g.value(x0);
  BigReal eps = tenpow(-PrecisionScope::current_digits() + 3);
  for (int i = 1; i <= samples; ++i) {
    BigReal x1 = -R + h * static_cast<long>(i);
    BigReal f1 = g.value(x1);
    if (f0.sign() * f1.sign() < 0) {
      BigReal lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 60; ++it) {
        BigReal mid = (lo + hi) / 2L;
        BigReal fm = g.value(mid);
        if (fm.sign() == flo.sign()) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
        if (hi - lo < BigReal(1e-12)) break;
      }
      BigReal z = (lo + hi) / 2L;
      for (int it = 0; it < 50; ++it) {
        BigReal dz = g.value(z) / g.derivative(z);
        z -= dz;
        if (abs(dz) < eps) break;
      }
      out.push_back(z);
    }
    x0 = std::move(x1);
    f0 = std::move(f1);
  }
  return out;
}

int eigenfunction_zero_count(const LegendreEigenfunction& g, const BigReal& R, int samples) {
  int digits = PrecisionScope::current_digits();
  int T = taylor_order_for_radius(R * 2L / BigReal::pi(), digits);
  Series s = Series(0, g.taylor(T));
  BigReal pi = BigReal::pi();
  auto pts = circle_points(R, samples);
  BigReal total(0L);
  BigReal prev = s.eval(pts.back()).arg();
  for (const auto& z : pts) {
    BigReal cur = s.eval(z).arg();
    BigReal d = cur - prev;
    while (d > pi) d -= 2L * pi;
    while (d < -pi) d += 2L * pi;
    total += d;
    prev = cur;
  }
  return static_cast<int>(std::lround((total / (2L * pi)).to_double()));
}

}  // namespace hb
