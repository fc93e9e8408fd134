#include "hb/bigreal.hpp"

#include <gmp.h>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hb {

namespace {
thread_local int t_bits = 128;
}

int digits_to_bits(int digits) { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 8; }
int bits_to_digits(int bits) { return static_cast<int>(std::floor((bits - 8) / 3.3219280948873623)); }

PrecisionScope::PrecisionScope(int digits) : saved_(t_bits) {
  if (digits < 1) throw std::invalid_argument("precision must be positive");
  t_bits = digits_to_bits(digits);
}

PrecisionScope::PrecisionScope(int nbits, BitsTag) : saved_(t_bits) { t_bits = nbits; }

PrecisionScope PrecisionScope::bits(int nbits) { return PrecisionScope(nbits, BitsTag{}); }

PrecisionScope::~PrecisionScope() { t_bits = saved_; }

int PrecisionScope::current_bits() { return t_bits; }
int PrecisionScope::current_digits() { return bits_to_digits(t_bits); }

PrecisionContext PrecisionContext::for_sizes(int digits, int n_max, int t_max) {
  PrecisionContext c;
  c.digits = digits;
  c.guard = 15 + static_cast<int>(std::ceil(std::log10(std::max(n_max, 2)))) + t_max / 10;
  return c;
}

bool PrecisionContext::valid(int n_max) const {
  return digits > 0 && guard >= 15 + static_cast<int>(std::ceil(std::log10(std::max(n_max, 2))));
}

BigReal::BigReal() {
  mpfr_init2(v_, t_bits);
  mpfr_set_zero(v_, 1);
}
BigReal::BigReal(int v) : BigReal(static_cast<long>(v)) {}
BigReal::BigReal(long v) {
  mpfr_init2(v_, t_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}
BigReal::BigReal(unsigned long v) {
  mpfr_init2(v_, t_bits);
  mpfr_set_ui(v_, v, MPFR_RNDN);
}
BigReal::BigReal(long long v) {
  mpfr_init2(v_, t_bits);
  mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
}
BigReal::BigReal(double v) {
  mpfr_init2(v_, t_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}
BigReal::BigReal(const char* s) {
  mpfr_init2(v_, t_bits);
  if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_))
    throw std::invalid_argument(std::string("not a number: ") + s);
}
BigReal::BigReal(const std::string& s) : BigReal(s.c_str()) {}
BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi() {
  BigReal r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_mpq(const __mpq_struct* q) {
  BigReal r;
  mpfr_set_q(r.v_, q, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long e) {
  BigReal r(1L);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigReal BigReal::rounded() const {
  BigReal r;
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::exponent10() const {
  if (is_zero()) return 0;
  BigReal a = abs(*this);
  BigReal l = log10(a);
  return mpfr_get_si(floor(l).v_, MPFR_RNDN);
}

namespace {
std::string mantissa(mpfr_srcptr v, int sig, mpfr_exp_t& e) {
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v, MPFR_RNDZ);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string BigReal::str(int sig) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  std::string m = mantissa(v_, sig, e);
  bool neg = m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out = neg ? "-" : "";
  if (e <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-e), '0');
    out += m;
  } else if (e >= static_cast<mpfr_exp_t>(m.size())) {
    out += m;
    out.append(static_cast<size_t>(e) - m.size(), '0');
  } else {
    out += m.substr(0, static_cast<size_t>(e));
    out += '.';
    out += m.substr(static_cast<size_t>(e));
  }
  return out;
}

std::string BigReal::sci(int sig) const {
  if (!is_finite()) return str(sig);
  if (is_zero()) return "0";
  mpfr_exp_t e;
  std::string m = mantissa(v_, sig, e);
  bool neg = m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out = neg ? "-" : "";
  out += m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) { return *this = *this + o; }
BigReal& BigReal::operator-=(const BigReal& o) { return *this = *this - o; }
BigReal& BigReal::operator*=(const BigReal& o) { return *this = *this * o; }
BigReal& BigReal::operator/=(const BigReal& o) { return *this = *this / o; }
BigReal& BigReal::operator*=(long o) { return *this = *this * o; }
BigReal& BigReal::operator/=(long o) { return *this = *this / o; }

#define HB_BINOP(op, fn)                                    \
  BigReal operator op(const BigReal& a, const BigReal& b) { \
    BigReal r;                                              \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                        \
    return r;                                               \
  }
HB_BINOP(+, mpfr_add)
HB_BINOP(-, mpfr_sub)
HB_BINOP(*, mpfr_mul)
HB_BINOP(/, mpfr_div)
#undef HB_BINOP

BigReal operator*(const BigReal& a, long b) {
  BigReal r;
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(const BigReal& a, long b) {
  BigReal r;
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator+(const BigReal& a, long b) {
  BigReal r;
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator-(const BigReal& a, long b) {
  BigReal r;
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(long a, const BigReal& b) {
  BigReal r;
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  int d = os.precision() > 6 ? static_cast<int>(os.precision()) : bits_to_digits(x.precision_bits());
  return os << x.str(d);
}

#define HB_UNARY(name, fn)              \
  BigReal name(const BigReal& x) {      \
    BigReal r;                          \
    fn(r.raw(), x.raw(), MPFR_RNDN);    \
    return r;                           \
  }
HB_UNARY(abs, mpfr_abs)
HB_UNARY(sqrt, mpfr_sqrt)
HB_UNARY(exp, mpfr_exp)
HB_UNARY(log, mpfr_log)
HB_UNARY(log1p, mpfr_log1p)
HB_UNARY(log10, mpfr_log10)
HB_UNARY(sin, mpfr_sin)
HB_UNARY(cos, mpfr_cos)
HB_UNARY(atan, mpfr_atan)
HB_UNARY(gamma, mpfr_gamma)
HB_UNARY(digamma, mpfr_digamma)
#undef HB_UNARY

BigReal lgamma(const BigReal& x) {
  BigReal r;
  int s;
  mpfr_lgamma(r.raw(), &s, x.raw(), MPFR_RNDN);
  return r;
}

BigReal floor(const BigReal& x) {
  BigReal r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r;
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal factorial(long n) {
  BigReal r;
  mpfr_fac_ui(r.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

BigReal tenpow(long e) {
  BigReal r(10L);
  return pow(r, e);
}

}  // namespace hb
