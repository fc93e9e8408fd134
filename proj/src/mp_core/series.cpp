#include "hb/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hb {

namespace {

bool is_odd(int e) { return (e % 2 + 2) % 2 == 1; }

void require_same_context(const Series& f, const Series& g) {
  if (f.precision_bits() != g.precision_bits())
    throw std::invalid_argument("series built under different precision contexts");
}

int safe_add(int a, int b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  return a + b;
}

Series build(int low, std::vector<BigReal> c, Parity p, int order) {
  if (order < Series::kExact && static_cast<int>(c.size()) > order - low + 1)
    c.resize(static_cast<size_t>(std::max(0, order - low + 1)));
  return Series(low, std::move(c), p, order);
}

// position of the first nonzero stored coefficient
int leading_index(const Series& f) {
  const auto& c = f.coeffs();
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return static_cast<int>(i);
  throw std::domain_error("series is identically zero");
}

bool vanishes_at_zero(const Series& f) {
  for (int e = f.low(); e <= std::min(0, f.high()); ++e)
    if (!f[e].is_zero()) return false;
  return true;
}

}  // namespace

Series::Series(int low, std::vector<BigReal> coeffs, Parity parity, int order)
    : low_(low), bits_(PrecisionScope::current_bits()), parity_(parity), c_(std::move(coeffs)) {
  order_ = order == INT_MIN ? high() : order;
  if (order_ < high()) throw std::invalid_argument("series order below stored coefficients");
  check_parity();
}

Series Series::polynomial(int low, std::vector<BigReal> coeffs, Parity parity) {
  return Series(low, std::move(coeffs), parity, kExact);
}

Series Series::monomial(int exponent, const BigReal& c, int order) {
  Parity p = is_odd(exponent) ? Parity::odd : Parity::even;
  return Series(exponent, {c}, p, order);
}

Series Series::zero(int order) { return Series(0, {}, Parity::even, order); }

void Series::check_parity() const {
  if (parity_ == Parity::none) return;
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    bool wrong = parity_ == Parity::even ? is_odd(e) : !is_odd(e);
    if (wrong && !c_[i].is_zero()) throw std::invalid_argument("parity metadata contradicts coefficients");
  }
}

BigReal Series::operator[](int e) const {
  if (e > order_) throw std::out_of_range("coefficient beyond truncation order");
  if (e < low_ || e > high()) return BigReal(0L);
  return c_[static_cast<size_t>(e - low_)];
}

Series Series::truncated(int T) const {
  if (T > order_) throw std::out_of_range("cannot extend a truncated series");
  std::vector<BigReal> c = c_;
  return build(low_, std::move(c), parity_, T);
}

Series Series::derivative() const {
  std::vector<BigReal> c;
  c.reserve(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(low_ + static_cast<int>(i)));
  Parity p = parity_ == Parity::even ? Parity::odd : parity_ == Parity::odd ? Parity::even : Parity::none;
  return Series(low_ - 1, std::move(c), p, order_ >= kExact ? kExact : order_ - 1);
}

Series Series::operator-() const {
  std::vector<BigReal> c;
  for (const auto& x : c_) c.push_back(-x);
  return Series(low_, std::move(c), parity_, order_);
}

Series Series::scaled(const BigReal& s) const {
  std::vector<BigReal> c;
  for (const auto& x : c_) c.push_back(x * s);
  return Series(low_, std::move(c), parity_, order_);
}

BigReal Series::eval(const BigReal& z) const {
  BigReal acc(0L);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  if (low_ != 0) acc *= pow(z, static_cast<long>(low_));
  return acc;
}

Complex Series::eval(const Complex& z) const {
  Complex acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + Complex(c_[i]);
  if (low_ > 0) {
    for (int k = 0; k < low_; ++k) acc = acc * z;
  } else if (low_ < 0) {
    Complex inv = Complex(BigReal(1L)) / z;
    for (int k = 0; k < -low_; ++k) acc = acc * inv;
  }
  return acc;
}

Parity combine_product(Parity a, Parity b) {
  if (a == Parity::none || b == Parity::none) return Parity::none;
  return a == b ? Parity::even : Parity::odd;
}

Series series_add(const Series& f, const Series& g, int T) {
  require_same_context(f, g);
  int order = std::min({T, f.order(), g.order()});
  int low = std::min(f.low(), g.low());
  int high = std::min(order, std::max(f.high(), g.high()));
  std::vector<BigReal> c;
  for (int e = low; e <= high; ++e) c.push_back(f[e] + g[e]);
  Parity p = f.parity() == g.parity() ? f.parity() : Parity::none;
  return build(low, std::move(c), p, order);
}

Series series_multiply(const Series& f, const Series& g, int T) {
  require_same_context(f, g);
  int order = std::min({T, safe_add(f.order(), g.low()), safe_add(g.order(), f.low())});
  if (order < T && T < Series::kExact) throw std::invalid_argument("inputs do not determine the product to order T");
  int low = f.low() + g.low();
  int high = std::min(order, f.high() + g.high());
  std::vector<BigReal> c;
  for (int e = low; e <= high; ++e) {
    BigReal s(0L);
    int i0 = std::max(f.low(), e - g.high());
    int i1 = std::min(f.high(), e - g.low());
    for (int i = i0; i <= i1; ++i) s += f.coeffs()[static_cast<size_t>(i - f.low())] * g.coeffs()[static_cast<size_t>(e - i - g.low())];
    c.push_back(std::move(s));
  }
  return build(low, std::move(c), combine_product(f.parity(), g.parity()), order);
}

Series series_reciprocal(const Series& f, int T) {
  int lead = leading_index(f);
  int l = f.low() + lead;
  int order = f.order() >= Series::kExact ? T : std::min(T, f.order() - 2 * l);
  if (order >= Series::kExact) throw std::invalid_argument("reciprocal needs a finite order");
  int n = order + l + 1;
  std::vector<BigReal> a;
  for (int e = l; e < l + n; ++e) a.push_back(f[e]);
  std::vector<BigReal> r(static_cast<size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) {
    BigReal s = k == 0 ? BigReal(1L) : BigReal(0L);
    for (int j = 1; j <= k; ++j) s -= a[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
    r[static_cast<size_t>(k)] = s / a[0];
  }
  Parity p = f.parity();
  return build(-l, std::move(r), p, order);
}

Series series_log1p(const Series& f, int T) {
  if (!vanishes_at_zero(f)) throw std::invalid_argument("log1p needs f(0) = 0");
  int order = std::min(T, f.order());
  if (order >= Series::kExact) throw std::invalid_argument("log1p needs a finite order");
  std::vector<BigReal> g(static_cast<size_t>(order + 1));
  std::vector<BigReal> h(static_cast<size_t>(order + 1));
  h[0] = BigReal(1L);
  for (int n = 1; n <= order; ++n) h[static_cast<size_t>(n)] = f[n];
  for (int n = 1; n <= order; ++n) {
    BigReal s = h[static_cast<size_t>(n)] * static_cast<long>(n);
    for (int k = 1; k < n; ++k) s -= static_cast<long>(k) * g[static_cast<size_t>(k)] * h[static_cast<size_t>(n - k)];
    g[static_cast<size_t>(n)] = s / static_cast<long>(n);
  }
  Parity p = f.parity() == Parity::even ? Parity::even : Parity::none;
  return build(0, std::move(g), p, order);
}

Series series_exp(const Series& f, int T) {
  if (!vanishes_at_zero(f)) throw std::invalid_argument("exp needs f(0) = 0");
  int order = std::min(T, f.order());
  if (order >= Series::kExact) throw std::invalid_argument("exp needs a finite order");
  std::vector<BigReal> e(static_cast<size_t>(order + 1));
  std::vector<BigReal> a(static_cast<size_t>(order + 1));
  for (int n = 1; n <= order; ++n) a[static_cast<size_t>(n)] = f[n] * static_cast<long>(n);
  e[0] = BigReal(1L);
  for (int n = 1; n <= order; ++n) {
    BigReal s(0L);
    for (int k = 1; k <= n; ++k) s += a[static_cast<size_t>(k)] * e[static_cast<size_t>(n - k)];
    e[static_cast<size_t>(n)] = s / static_cast<long>(n);
  }
  Parity p = f.parity() == Parity::even ? Parity::even : Parity::none;
  return build(0, std::move(e), p, order);
}

Series series_pow(const Series& f, int m, int T) {
  if (m < 0) throw std::invalid_argument("negative powers go through series_reciprocal");
  if (m == 0) return Series::polynomial(0, {BigReal(1L)}, Parity::even).truncated(std::min(T, Series::kExact));
  int lead = leading_index(f);
  int l = f.low() + lead;
  int order = f.order() >= Series::kExact ? T : std::min(T, m * l + (f.order() - l));
  if (order >= Series::kExact) {
    Series r = f;
    for (int k = 1; k < m; ++k) r = series_multiply(r, f, Series::kExact);
    return r;
  }
  int n = order - m * l + 1;
  std::vector<BigReal> a;
  for (int e = l; e < l + n; ++e) a.push_back(f[e]);
  std::vector<BigReal> b(static_cast<size_t>(std::max(n, 0)));
  if (n > 0) b[0] = pow(a[0], static_cast<long>(m));
  for (int k = 1; k < n; ++k) {
    BigReal s(0L);
    for (int j = 1; j <= k; ++j) {
      long w = static_cast<long>(m + 1) * j - k;
      if (w != 0 && !a[static_cast<size_t>(j)].is_zero()) s += a[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)] * w;
    }
    b[static_cast<size_t>(k)] = s / (a[0] * static_cast<long>(k));
  }
  Parity p = f.parity();
  if (p == Parity::odd && m % 2 == 0) p = Parity::even;
  if (p == Parity::even || p == Parity::odd) {
    for (int k = 0; k < n; ++k) {
      int e = m * l + k;
      bool wrong = p == Parity::even ? is_odd(e) : !is_odd(e);
      if (wrong) b[static_cast<size_t>(k)] = BigReal(0L);
    }
  }
  return build(m * l, std::move(b), p, order);
}

Series series_compose_monomial(const Series& f, const BigReal& c, int k) {
  if (k < 1) throw std::invalid_argument("composition exponent must be positive");
  std::vector<BigReal> out;
  int low = f.low() * k;
  for (int e = f.low(); e <= f.high(); ++e) {
    out.push_back(pow(c, static_cast<long>(e)) * f[e]);
    if (e < f.high())
      for (int j = 1; j < k; ++j) out.emplace_back(0L);
  }
  Parity p = k % 2 == 0 ? Parity::even : f.parity();
  int order = f.order() >= Series::kExact ? Series::kExact : f.order() * k + (k - 1);
  return Series(low, std::move(out), p, order);
}

}  // namespace hb
