#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace hb {

int digits_to_bits(int digits);
int bits_to_digits(int bits);

// Working precision of the calling thread, in bits. Every BigReal created or
// produced by an arithmetic operation on this thread uses it.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  static PrecisionScope bits(int nbits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static int current_bits();
  static int current_digits();

 private:
  struct BitsTag {};
  PrecisionScope(int nbits, BitsTag);
  int saved_;
};

struct PrecisionContext {
  int digits = 30;
  int guard = 20;

  int working_digits() const { return digits + guard; }
  int certify_digits() const { return digits + 2 * guard; }
  static PrecisionContext for_sizes(int digits, int n_max, int t_max = 0);
  bool valid(int n_max) const;
};

class BigReal {
 public:
  BigReal();
  BigReal(int v);
  BigReal(long v);
  BigReal(unsigned long v);
  BigReal(long long v);
  BigReal(double v);
  explicit BigReal(const char* s);
  explicit BigReal(const std::string& s);
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal pi();
  static BigReal from_mpq(const __mpq_struct* q);
  static BigReal pow2(long e);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  int precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }

  // re-round to the current thread precision
  BigReal rounded() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDZ); }
  long exponent10() const;

  // significant decimal digits, truncated toward zero; "0.xxxx" when |v| < 1
  std::string str(int sig_digits) const;
  std::string sci(int sig_digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t v_;
};

// integer operands promote through BigReal(long); these keep `x * 3` unambiguous
inline BigReal operator*(const BigReal& a, int b) { return a * static_cast<long>(b); }
inline BigReal operator*(int a, const BigReal& b) { return static_cast<long>(a) * b; }
inline BigReal operator/(const BigReal& a, int b) { return a / static_cast<long>(b); }
inline BigReal operator/(int a, const BigReal& b) { return static_cast<long>(a) / b; }
inline BigReal operator+(const BigReal& a, int b) { return a + static_cast<long>(b); }
inline BigReal operator+(int a, const BigReal& b) { return static_cast<long>(a) + b; }
inline BigReal operator-(const BigReal& a, int b) { return a - static_cast<long>(b); }
inline BigReal operator-(int a, const BigReal& b) { return static_cast<long>(a) - b; }

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal floor(const BigReal& x);
BigReal ldexp(const BigReal& x, long e);
BigReal lgamma(const BigReal& x);
BigReal gamma(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);
BigReal factorial(long n);

// 10^e as a BigReal
BigReal tenpow(long e);

}  // namespace hb
