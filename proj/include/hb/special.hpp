#pragma once

#include "hb/bigreal.hpp"

#include <gmpxx.h>

#include <optional>

namespace hb {

BigReal legendre_eval(int n, const BigReal& x);

// exact, memoized; B_1 = -1/2
mpq_class bernoulli(int n);
// Euler (secant) numbers E_0 = 1, E_2 = -1, E_4 = 5, ...
mpz_class euler_number(int n);

// value = rational * pi^pi_power when exact, otherwise numeric only
struct SpecialValue {
  std::optional<mpq_class> rational;
  int pi_power = 0;
  BigReal numeric;

  bool exact() const { return rational.has_value(); }
};

SpecialValue zeta_int(int s);
SpecialValue beta_int(int s);

// Hurwitz zeta by Euler-Maclaurin, any real s != 1, q > 0
BigReal hurwitz_zeta(const BigReal& s, const BigReal& q);
BigReal zeta(const BigReal& s);
// Dirichlet beta for real s via Hurwitz values at 1/4 and 3/4
BigReal dirichlet_beta(const BigReal& s);

}  // namespace hb
