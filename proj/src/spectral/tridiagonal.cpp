#include "hb/spectral.hpp"

#include <stdexcept>
#include <utility>

namespace hb {

TridiagonalSystem build_matrix(int N, const BigReal& a) {
  if (N < 2) throw std::invalid_argument("truncation N must be at least 2");
  if (a.sign() < 0) throw std::invalid_argument("coupling a must be non-negative");
  TridiagonalSystem s;
  s.N = N;
  s.a = a;
  s.sub.resize(static_cast<size_t>(N + 1));
  s.diag.resize(static_cast<size_t>(N + 1));
  s.super.resize(static_cast<size_t>(N + 1));
  for (int m = 0; m <= N; ++m) {
    auto i = static_cast<size_t>(m);
    s.diag[i] = BigReal(static_cast<long>(m) * (m + 1));
    s.sub[i] = m == 0 ? BigReal(0L) : -a * static_cast<long>(m) / static_cast<long>(2 * m - 1);
    s.super[i] = m == N ? BigReal(0L) : a * static_cast<long>(m + 1) / static_cast<long>(2 * m + 3);
  }
  return s;
}

namespace {

void rescale(BigReal& p, BigReal& p0, BigReal& dp, BigReal& dp0) {
  if (p.is_zero() || !p.is_finite()) return;
  long e = mpfr_get_exp(p.raw());
  if (e > 4096 || e < -4096) {
    p = ldexp(p, -e);
    p0 = ldexp(p0, -e);
    dp = ldexp(dp, -e);
    dp0 = ldexp(dp0, -e);
  }
}

// p_N(lambda) and its derivative, both scaled by the same positive factor
std::pair<BigReal, BigReal> char_poly(const TridiagonalSystem& s, const BigReal& lam) {
  BigReal pm1(1L), dpm1(0L);
  BigReal p0 = -lam, dp0(-1L);
  for (int k = 1; k <= s.N; ++k) {
    auto i = static_cast<size_t>(k);
    BigReal c = -(s.sub[i] * s.super[i - 1]);
    BigReal d = s.diag[i] - lam;
    BigReal p = d * p0 + c * pm1;
    BigReal dp = d * dp0 - p0 + c * dpm1;
    pm1 = std::move(p0);
    dpm1 = std::move(dp0);
    p0 = std::move(p);
    dp0 = std::move(dp);
    rescale(p0, pm1, dp0, dpm1);
  }
  return {p0, dp0};
}

}  // namespace

BigReal characteristic_value(const TridiagonalSystem& sys, const BigReal& lambda) {
  return char_poly(sys, lambda).first;
}

BigReal eigenvalue_in(const TridiagonalSystem& sys, const BigReal& lo_in, const BigReal& hi_in) {
  BigReal lo = lo_in, hi = hi_in;
  int slo = characteristic_value(sys, lo).sign();
  int shi = characteristic_value(sys, hi).sign();
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) throw std::runtime_error("no sign change of the characteristic polynomial in the interval");
  BigReal coarse = (abs(hi) + 1L) * BigReal(1e-12);
  while (hi - lo > coarse) {
    BigReal mid = (lo + hi) / 2L;
    int sm = characteristic_value(sys, mid).sign();
    if (sm == 0) return mid;
    if (sm == slo) lo = mid;
    else hi = mid;
  }
  BigReal tol = (abs(hi) + 1L) * tenpow(-PrecisionScope::current_digits() + 2);
  BigReal x = (lo + hi) / 2L;
  for (int it = 0; it < 100; ++it) {
    auto [p, dp] = char_poly(sys, x);
    if (p.is_zero()) return x;
    BigReal dx = p / dp;
    BigReal nx = x - dx;
    if (nx < lo || nx > hi) {
      int sm = p.sign();
      if (sm == slo) lo = x;
      else hi = x;
      nx = (lo + hi) / 2L;
    }
    x = nx;
    if (abs(dx) < tol) return x;
  }
  throw std::runtime_error("eigenvalue Newton refinement did not converge");
}

std::vector<BigReal> eigenvector_for(const TridiagonalSystem& s, const BigReal& lambda) {
  std::vector<BigReal> xi(static_cast<size_t>(s.N + 2));
  xi[static_cast<size_t>(s.N + 1)] = BigReal(0L);
  xi[static_cast<size_t>(s.N)] = BigReal(1L);
  for (int n = s.N; n >= 1; --n) {
    auto i = static_cast<size_t>(n);
    xi[i - 1] = -((s.diag[i] - lambda) * xi[i] + s.super[i] * xi[i + 1]) / s.sub[i];
  }
  xi.pop_back();
  BigReal x0 = xi[0];
  for (auto& v : xi) v /= x0;
  return xi;
}

std::vector<BigReal> inverse_iteration(const TridiagonalSystem& s, const BigReal& lambda, int iterations) {
  int n = s.N + 1;
  auto un = static_cast<size_t>(n);
  BigReal shift = lambda + (abs(lambda) + 1L) * tenpow(-PrecisionScope::current_digits() / 2);
  std::vector<BigReal> x(un, BigReal(1L));
  BigReal tiny = tenpow(-2 * PrecisionScope::current_digits());
  for (int it = 0; it < iterations; ++it) {
    std::vector<BigReal> dl(un), d(un), du(un), b = x;
    for (int i = 0; i < n; ++i) {
      auto k = static_cast<size_t>(i);
      d[k] = s.diag[k] - shift;
      if (i + 1 < n) {
        dl[k] = s.sub[k + 1];
        du[k] = s.super[k];
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      auto k = static_cast<size_t>(i);
      if (abs(d[k]) >= abs(dl[k])) {
        if (d[k].is_zero()) d[k] = tiny;
        BigReal fact = dl[k] / d[k];
        d[k + 1] -= fact * du[k];
        b[k + 1] -= fact * b[k];
        dl[k] = BigReal(0L);
      } else {
        BigReal fact = d[k] / dl[k];
        d[k] = dl[k];
        BigReal temp = d[k + 1];
        d[k + 1] = du[k] - fact * temp;
        if (i + 2 < n) {
          dl[k] = du[k + 1];
          du[k + 1] = -fact * dl[k];
        } else {
          dl[k] = BigReal(0L);
        }
        du[k] = temp;
        BigReal tb = b[k];
        b[k] = b[k + 1];
        b[k + 1] = tb - fact * b[k + 1];
      }
    }
    if (d[un - 1].is_zero()) d[un - 1] = tiny;
    b[un - 1] /= d[un - 1];
    if (n > 1) b[un - 2] = (b[un - 2] - du[un - 2] * b[un - 1]) / d[un - 2];
    for (int i = n - 3; i >= 0; --i) {
      auto k = static_cast<size_t>(i);
      b[k] = (b[k] - du[k] * b[k + 1] - dl[k] * b[k + 2]) / d[k];
    }
    BigReal m(0L);
    for (const auto& v : b) m = max(m, abs(v));
    for (auto& v : b) v /= m;
    x = std::move(b);
  }
  BigReal x0 = x[0];
  for (auto& v : x) v /= x0;
  return x;
}

BigReal eigen_residual(const TridiagonalSystem& s, const EigenPair& pair) {
  BigReal worst(0L), norm(0L);
  for (const auto& v : pair.xi) norm = max(norm, abs(v));
  for (int n = 0; n <= s.N; ++n) {
    auto i = static_cast<size_t>(n);
    BigReal r = (s.diag[i] - pair.lambda) * pair.xi[i];
    if (n > 0) r += s.sub[i] * pair.xi[i - 1];
    if (n < s.N) r += s.super[i] * pair.xi[i + 1];
    worst = max(worst, abs(r));
  }
  return worst / norm;
}

EigenPair ground_eigenpair(const TridiagonalSystem& sys) {
  if (!(sys.a.sign() > 0 && sys.a < BigReal(1.5)))
    throw std::invalid_argument("ground_eigenpair needs 0 < a < 3/2");
  EigenPair p;
  p.lambda = eigenvalue_in(sys, BigReal(0L), sys.a / 3L);
  p.xi = eigenvector_for(sys, p.lambda);
  p.residual = eigen_residual(sys, p);
  BigReal bound = tenpow(-PrecisionScope::current_digits() + 5);
  if (p.residual > bound) throw std::runtime_error("eigenpair residual above bound: working precision insufficient");
  return p;
}

BigReal legendre_condition(const std::vector<BigReal>& xi) {
  BigReal s(0L);
  for (size_t n = 0; n < xi.size(); ++n) {
    // (-1)^floor((n-1)/2): -,+,+,-,-,+,...
    bool neg = ((n + 1) / 2) % 2 == 0;
    if (neg) s -= xi[n];
    else s += xi[n];
  }
  return s;
}

BigReal legendre_condition(const EigenPair& pair) { return legendre_condition(pair.xi); }

LocalizationInterval localization_interval(const BigReal& a, int k) {
  BigReal center(static_cast<long>(k) * (k + 1));
  BigReal lo = k == 0 ? center : center - a * static_cast<long>(k) / static_cast<long>(2 * k - 1);
  BigReal hi = center + a * static_cast<long>(k + 1) / static_cast<long>(2 * k + 3);
  return {lo, hi};
}

std::vector<BigReal> eigenvalue_table(const BigReal& a, int k_max, int N) {
  if (!(a.sign() > 0 && a < BigReal(1.5))) throw std::invalid_argument("eigenvalue_table needs 0 < a < 3/2");
  if (N < k_max + 1) throw std::invalid_argument("truncation too small for the requested eigenvalues");
  TridiagonalSystem sys = build_matrix(N, a);
  std::vector<BigReal> out;
  for (int k = 0; k <= k_max; ++k) {
    auto iv = localization_interval(a, k);
    if (k < k_max && !(iv.hi < localization_interval(a, k + 1).lo))
      throw std::invalid_argument("localization intervals overlap");
    out.push_back(eigenvalue_in(sys, iv.lo, iv.hi));
  }
  return out;
}

}  // namespace hb
