#pragma once

#include "hb/bigreal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hb {

// (N+1)x(N+1) truncation of the three-term operator with b = 1; row m has
// sub = -a m/(2m-1), diag = m(m+1), super = a(m+1)/(2m+3)
struct TridiagonalSystem {
  int N = 0;
  BigReal a;
  std::vector<BigReal> sub;
  std::vector<BigReal> diag;
  std::vector<BigReal> super;
};

TridiagonalSystem build_matrix(int N, const BigReal& a);

struct EigenPair {
  BigReal lambda;
  std::vector<BigReal> xi;
  BigReal residual;
};

// leading-minor recurrence p_N(lambda) of det(T_N - lambda), rescaled; sign is exact
BigReal characteristic_value(const TridiagonalSystem& sys, const BigReal& lambda);
// root of p_N inside [lo, hi] by bisection then Newton
BigReal eigenvalue_in(const TridiagonalSystem& sys, const BigReal& lo, const BigReal& hi);
// eigenvector by the downward three-term recurrence, normalized xi_0 = 1
std::vector<BigReal> eigenvector_for(const TridiagonalSystem& sys, const BigReal& lambda);
// inverse iteration with tridiagonal LU and partial pivoting, normalized xi_0 = 1
std::vector<BigReal> inverse_iteration(const TridiagonalSystem& sys, const BigReal& lambda, int iterations = 3);
BigReal eigen_residual(const TridiagonalSystem& sys, const EigenPair& pair);

EigenPair ground_eigenpair(const TridiagonalSystem& sys);
BigReal legendre_condition(const EigenPair& pair);
BigReal legendre_condition(const std::vector<BigReal>& xi);

struct LocalizationInterval {
  BigReal lo;
  BigReal hi;
};
LocalizationInterval localization_interval(const BigReal& a, int k);
std::vector<BigReal> eigenvalue_table(const BigReal& a, int k_max, int N);

struct HBConstants {
  BigReal C;
  BigReal L1;
  BigReal a_star;
  BigReal lambda_star;
  std::vector<BigReal> xi;
  int N = 0;
  int digits_certified = 0;
  int working_digits = 0;
  int bracket_sign_changes = 0;
  std::vector<int> ladder;
};

struct SolveOptions {
  int initial_N = 64;
  int max_N = 2048;
  std::string bracket_lo = "1.44";
  std::string bracket_hi = "1.46";
  int guard = 0;  // 0 selects the default policy
  bool scan_bracket = true;
};

HBConstants solve_constants(int digits, const SolveOptions& opts = {});

// value of S(a) for the ground pair of T_N(a)
BigReal condition_at(int N, const BigReal& a);

nlohmann::json to_json(const HBConstants& c);

}  // namespace hb
