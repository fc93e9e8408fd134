#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace hb {

// Polynomial in (b^2, lambda) with exact rational coefficients; key (i, j)
// stands for b^{2i} lambda^j.
class ExactPolynomial {
 public:
  using Key = std::pair<int, int>;

  ExactPolynomial() = default;
  static ExactPolynomial constant(const mpq_class& c);
  static ExactPolynomial b2();
  static ExactPolynomial lambda();

  const std::map<Key, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool has_integer_coefficients() const;
  int total_degree() const;

  ExactPolynomial& operator+=(const ExactPolynomial& o);
  ExactPolynomial& operator-=(const ExactPolynomial& o);
  ExactPolynomial& operator*=(const mpq_class& s);

  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const mpq_class& s) { return a *= s; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(const Key& k, const mpq_class& c);
  std::map<Key, mpq_class> terms_;
};

}  // namespace hb
