#include "hb/special.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace hb {

BigReal legendre_eval(int n, const BigReal& x) {
  if (n < 0) throw std::invalid_argument("legendre degree must be non-negative");
  BigReal p0(1L);
  if (n == 0) return p0;
  BigReal p1 = x;
  for (int k = 1; k < n; ++k) {
    BigReal p2 = ((2L * k + 1) * x * p1 - static_cast<long>(k) * p0) / static_cast<long>(k + 1);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

namespace {

std::mutex g_number_mutex;
std::vector<mpq_class> g_bernoulli{mpq_class(1)};
std::vector<mpz_class> g_euler{mpz_class(1)};

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

mpq_class bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("negative Bernoulli index");
  std::lock_guard<std::mutex> lock(g_number_mutex);
  while (static_cast<int>(g_bernoulli.size()) <= n) {
    auto m = static_cast<unsigned long>(g_bernoulli.size());
    mpq_class s(0);
    for (unsigned long k = 0; k < m; ++k) s += mpq_class(binomial(m + 1, k)) * g_bernoulli[k];
    mpq_class b = -s / mpq_class(static_cast<long>(m + 1));
    b.canonicalize();
    g_bernoulli.push_back(b);
  }
  return g_bernoulli[static_cast<size_t>(n)];
}

mpz_class euler_number(int n) {
  if (n < 0) throw std::invalid_argument("negative Euler index");
  if (n % 2 == 1) return 0;
  std::lock_guard<std::mutex> lock(g_number_mutex);
  while (static_cast<int>(g_euler.size()) * 2 <= n) {
    auto m = static_cast<unsigned long>(g_euler.size()) * 2;
    mpz_class s(0);
    for (unsigned long k = 0; k < m / 2; ++k) s += binomial(m, 2 * k) * g_euler[k];
    g_euler.push_back(-s);
  }
  return g_euler[static_cast<size_t>(n / 2)];
}

SpecialValue zeta_int(int s) {
  if (s == 1) throw std::domain_error("zeta has a pole at s = 1");
  SpecialValue v;
  if (s <= 0) {
    mpq_class r = -bernoulli(1 - s) / mpq_class(1 - s);
    if (s == 0) r = mpq_class(-1, 2);
    r.canonicalize();
    v.rational = r;
    v.numeric = BigReal::from_mpq(r.get_mpq_t());
    return v;
  }
  if (s % 2 == 0) {
    int k = s / 2;
    mpz_class two_pow = mpz_class(1) << static_cast<unsigned>(s);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(s));
    mpq_class r = bernoulli(s) * mpq_class(two_pow) / mpq_class(2 * fact);
    if (k % 2 == 0) r = -r;
    r.canonicalize();
    v.rational = r;
    v.pi_power = s;
    v.numeric = BigReal::from_mpq(r.get_mpq_t()) * pow(BigReal::pi(), static_cast<long>(s));
    return v;
  }
  mpfr_zeta_ui(v.numeric.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
  return v;
}

SpecialValue beta_int(int s) {
  SpecialValue v;
  if (s <= 0) {
    mpq_class r(euler_number(-s), 2);
    r.canonicalize();
    v.rational = r;
    v.numeric = BigReal::from_mpq(r.get_mpq_t());
    return v;
  }
  if (s % 2 == 1) {
    int k = (s - 1) / 2;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    mpz_class four = mpz_class(1) << static_cast<unsigned>(2 * (k + 1));
    mpq_class r(euler_number(2 * k), four * fact);
    if (k % 2 == 1) r = -r;
    r.canonicalize();
    v.rational = r;
    v.pi_power = s;
    v.numeric = BigReal::from_mpq(r.get_mpq_t()) * pow(BigReal::pi(), static_cast<long>(s));
    return v;
  }
  v.numeric = dirichlet_beta(BigReal(static_cast<long>(s)));
  return v;
}

BigReal hurwitz_zeta(const BigReal& s, const BigReal& q) {
  if (s == BigReal(1L)) throw std::domain_error("Hurwitz zeta has a pole at s = 1");
  if (q.sign() <= 0) throw std::domain_error("Hurwitz zeta needs q > 0");
  int digits = PrecisionScope::current_digits();
  double sd = std::fabs(s.to_double());
  long n = static_cast<long>(digits * 0.5 + sd * 0.25) + 10;
  BigReal sum(0L);
  BigReal ms = -s;
  for (long k = 0; k < n; ++k) sum += pow(q + k, ms);
  BigReal x = q + n;
  BigReal xs = pow(x, ms);
  sum += x * xs / (s - 1L) + xs / 2L;
  BigReal eps = abs(sum) * tenpow(-digits - 3);
  if (eps.is_zero()) eps = tenpow(-digits - 3);
  // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
  BigReal poch = s;
  BigReal xp = xs / x;
  BigReal inv_x2 = 1L / (x * x);
  BigReal fact(2L);
  BigReal prev;
  for (int j = 1; j < 4 * digits + 40; ++j) {
    BigReal b = BigReal::from_mpq(bernoulli(2 * j).get_mpq_t());
    BigReal term = b / fact * poch * xp;
    if (term.is_zero() && poch.is_zero()) break;
    if (j > 2 && abs(term) > abs(prev)) {
      if (abs(prev) > eps * tenpow(8)) throw std::runtime_error("Euler-Maclaurin tail diverging for hurwitz_zeta");
      break;
    }
    sum += term;
    if (abs(term) < eps) break;
    prev = term;
    poch *= (s + (2L * j - 1)) * (s + 2L * j);
    xp *= inv_x2;
    fact *= (2L * j + 1) * (2L * j + 2);
  }
  return sum;
}

BigReal zeta(const BigReal& s) {
  BigReal r;
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

BigReal dirichlet_beta(const BigReal& s) {
  if (s == BigReal(1L)) return BigReal::pi() / 4L;
  BigReal quarter = BigReal(1L) / 4L;
  BigReal three_quarters = BigReal(3L) / 4L;
  return pow(BigReal(4L), -s) * (hurwitz_zeta(s, quarter) - hurwitz_zeta(s, three_quarters));
}

}  // namespace hb
