#include "hb/exact_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hb {

ExactPolynomial ExactPolynomial::constant(const mpq_class& c) {
  ExactPolynomial p;
  p.add_term({0, 0}, c);
  return p;
}

ExactPolynomial ExactPolynomial::b2() {
  ExactPolynomial p;
  p.add_term({1, 0}, 1);
  return p;
}

ExactPolynomial ExactPolynomial::lambda() {
  ExactPolynomial p;
  p.add_term({0, 1}, 1);
  return p;
}

void ExactPolynomial::add_term(const Key& k, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  it->second.canonicalize();
  if (it->second == 0) terms_.erase(it);
}

mpq_class ExactPolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool ExactPolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

int ExactPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) {
    c *= s;
    c.canonicalize();
  }
  return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

std::string ExactPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    bool unit = a == 1 && (k.first || k.second);
    if (!unit) os << a.get_str();
    if (k.first) os << (unit ? "" : "*") << "b^" << 2 * k.first;
    if (k.second) os << ((unit && !k.first) ? "" : "*") << "lambda" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

}  // namespace hb
