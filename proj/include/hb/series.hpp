#pragma once

#include "hb/bigreal.hpp"
#include "hb/complex.hpp"

#include <climits>
#include <vector>

namespace hb {

enum class Parity { even, odd, none };

// Truncated Laurent series sum_{k} c_k z^{low+k}. Coefficients are known
// through exponent `order`; stored ones end at `high()` and anything between
// high() and order is an exact zero. Polynomials carry order = kExact.
class Series {
 public:
  static constexpr int kExact = INT_MAX / 4;

  Series() = default;
  Series(int low, std::vector<BigReal> coeffs, Parity parity = Parity::none, int order = INT_MIN);

  static Series polynomial(int low, std::vector<BigReal> coeffs, Parity parity = Parity::none);
  static Series monomial(int exponent, const BigReal& c, int order = kExact);
  static Series zero(int order);

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  int order() const { return order_; }
  Parity parity() const { return parity_; }
  int precision_bits() const { return bits_; }
  const std::vector<BigReal>& coeffs() const { return c_; }

  // coefficient of z^e; zero below low, throws above order
  BigReal operator[](int e) const;

  Series truncated(int T) const;
  Series derivative() const;
  Series operator-() const;
  Series scaled(const BigReal& s) const;

  BigReal eval(const BigReal& z) const;
  Complex eval(const Complex& z) const;

 private:
  void check_parity() const;
  int low_ = 0;
  int order_ = 0;
  int bits_ = 0;
  Parity parity_ = Parity::none;
  std::vector<BigReal> c_;
};

Parity combine_product(Parity a, Parity b);

Series series_add(const Series& f, const Series& g, int T);
Series series_multiply(const Series& f, const Series& g, int T);
// 1/f with f's lowest stored coefficient nonzero
Series series_reciprocal(const Series& f, int T);
// log(1 + f), f.low() >= 1
Series series_log1p(const Series& f, int T);
// exp(f) with f.low() >= 1
Series series_exp(const Series& f, int T);
// f^m for integer m >= 0; f.low() may be negative
Series series_pow(const Series& f, int m, int T);
// f(c z^k)
Series series_compose_monomial(const Series& f, const BigReal& c, int k);

}  // namespace hb
