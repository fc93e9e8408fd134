#include <doctest.h>

#include "hb/bigreal.hpp"
#include "hb/complex.hpp"
#include "hb/exact_polynomial.hpp"
#include "hb/quadrature.hpp"
#include "hb/series.hpp"
#include "hb/special.hpp"

using namespace hb;

TEST_CASE("pi and e to 50 digits") {
  PrecisionScope s(60);
  CHECK(BigReal::pi().str(50) == "3.1415926535897932384626433832795028841971693993751");
  CHECK(exp(BigReal(1L)).str(40) == "2.718281828459045235360287471352662497757");
}

TEST_CASE("precision scopes nest and restore") {
  PrecisionScope outer(30);
  int bits = PrecisionScope::current_bits();
  {
    PrecisionScope inner(100);
    CHECK(PrecisionScope::current_bits() > bits);
    CHECK(BigReal(1L).precision_bits() == PrecisionScope::current_bits());
  }
  CHECK(PrecisionScope::current_bits() == bits);
}

TEST_CASE("decimal strings truncate") {
  PrecisionScope s(40);
  CHECK(BigReal("0.123456789").str(5) == "0.12345");
  CHECK(BigReal("-0.98769").str(4) == "-0.9876");
  CHECK(sqrt(BigReal(2L)).str(30) == "1.41421356237309504880168872420");
}

TEST_CASE("Bernoulli and Euler numbers") {
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(10) == mpq_class(5, 66));
  CHECK(bernoulli(7) == 0);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
}

TEST_CASE("zeta and beta at integers") {
  PrecisionScope s(50);
  auto z2 = zeta_int(2);
  REQUIRE(z2.exact());
  CHECK(*z2.rational == mpq_class(1, 6));
  CHECK(z2.pi_power == 2);
  auto b3 = beta_int(3);
  REQUIRE(b3.exact());
  CHECK(*b3.rational == mpq_class(1, 32));
  CHECK(b3.pi_power == 3);
  CHECK(zeta(BigReal(3L)).str(40) == "1.202056903159594285399738161511449990764");
  CHECK(dirichlet_beta(BigReal(2L)).str(40) == "0.9159655941772190150546035149323841107741");
  CHECK(abs(hurwitz_zeta(BigReal(2L), BigReal(0.5)) - BigReal::pi() * BigReal::pi() / 2L) < tenpow(-45));
}

TEST_CASE("Legendre polynomials") {
  PrecisionScope s(30);
  CHECK(abs(legendre_eval(3, BigReal(0.5)) + BigReal(0.4375)) < tenpow(-28));
  CHECK(abs(legendre_eval(20, BigReal(1L)) - 1L) < tenpow(-28));
  CHECK(abs(legendre_eval(21, BigReal(-1L)) + 1L) < tenpow(-28));
}

TEST_CASE("Gauss-Legendre quadrature") {
  PrecisionScope s(50);
  BigReal v = gauss_legendre_integrate([](const BigReal& x) { return exp(x); }, BigReal(0L), BigReal(1L), 30);
  CHECK(abs(v - (exp(BigReal(1L)) - 1L)) < tenpow(-45));
  auto r = integrate_adaptive([](const BigReal& x) { return 1L / (1L + x * x); }, BigReal(0L), BigReal(1L),
                              tenpow(-40));
  CHECK(abs(r.value - BigReal::pi() / 4L) < tenpow(-38));
}

TEST_CASE("series arithmetic") {
  PrecisionScope s(40);
  int T = 20;
  Series x = Series::polynomial(1, {BigReal(1L)});
  Series e = series_exp(series_log1p(x, T), T);
  CHECK(abs(e[0] - 1L) < tenpow(-38));
  CHECK(abs(e[1] - 1L) < tenpow(-38));
  for (int k = 2; k <= T; ++k) CHECK(abs(e[k]) < tenpow(-36));

  Series one_minus = Series::polynomial(0, {BigReal(1L), BigReal(-1L)});
  Series geo = series_reciprocal(one_minus, T);
  for (int k = 0; k <= T; ++k) CHECK(abs(geo[k] - 1L) < tenpow(-38));

  Series sq = series_pow(one_minus, 3, T);
  CHECK(abs(sq[2] - 3L) < tenpow(-38));
  CHECK(abs(sq[3] + 1L) < tenpow(-38));
  CHECK(abs(sq[4]) < tenpow(-38));

  Series lg = series_log1p(x, T);
  CHECK_THROWS(lg[T + 1]);
  CHECK(abs(lg[7] - BigReal(1L) / 7L) < tenpow(-38));
}

TEST_CASE("complex helpers") {
  PrecisionScope s(30);
  Complex z = Complex::polar(BigReal(2L), BigReal::pi() / 2L);
  CHECK(abs(z.re) < tenpow(-28));
  CHECK(abs(z.im - 2L) < tenpow(-28));
  Complex w = exp(Complex(BigReal(0L), BigReal::pi()));
  CHECK(abs(w.re + 1L) < tenpow(-28));
}

TEST_CASE("exact polynomials in b^2 and lambda") {
  auto b2 = ExactPolynomial::b2(), lam = ExactPolynomial::lambda();
  auto p = (b2 + lam) * (b2 - lam);
  CHECK(p.coeff(2, 0) == 1);
  CHECK(p.coeff(0, 2) == -1);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(p.total_degree() == 2);
  CHECK(p.has_integer_coefficients());
  CHECK_FALSE((p * mpq_class(1, 3)).has_integer_coefficients());
  CHECK((p - p).is_zero());
}
