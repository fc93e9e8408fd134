#pragma once

#include "hb/exact_polynomial.hpp"
#include "hb/hb_function.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hb {

enum class LKind { plus, minus };

// L_+(s) = sum tau_n^-s, L_-(s) = sum (-1)^n tau_n^-s
struct LSeriesValue {
  BigReal s;
  LKind kind = LKind::plus;
  BigReal value;  // zero at a pole
  BigReal error_bound;
  bool is_pole = false;
  BigReal residue;
};

struct LSeriesOptions {
  int n1 = 8;   // explicit terms
  int J = 60;   // order of the E_s expansion
};

// explicit terms n <= n1, then sum_{j even} e_j(s) times Hurwitz-type tails at s + j
LSeriesValue l_series(const HBConstants& c, const ZeroModel& zeros, LKind kind, const BigReal& s,
                      const LSeriesOptions& opts = {});
// L_+(2k) = -k [z^{2k}] log phi, k = 1..k_max
std::vector<BigReal> l_plus_even_from_phi(const HBConstants& c, int k_max);

// direct sums over n <= N plus Euler-Maclaurin / Boole tails, s >= 2
struct BruteForceValue {
  BigReal s;
  LKind kind;
  BigReal value;
};
std::vector<BruteForceValue> brute_force_l(const ZeroModel& zeros, const std::vector<int>& s_values, int N);

struct CheckItem {
  std::string check;
  nlohmann::json parameters;
  BigReal discrepancy;
  BigReal bound;
  BigReal tolerance;
  bool report_only = false;
  bool passed() const { return report_only || discrepancy <= tolerance; }
  std::string status() const;
};
nlohmann::json to_json(const CheckItem& item, int digits = 6);

std::vector<CheckItem> check_Lodd(const HBConstants& c, const ZeroModel& zeros, int m_max, const BigReal& tol);
std::vector<CheckItem> check_residue_identity(const HBConstants& c, const ZeroModel& zeros, int k_max,
                                              const BigReal& tol);
// report-only; includes the J-doubling stability of each discrepancy
std::vector<CheckItem> check_symmetry_conjecture(const HBConstants& c, const ZeroModel& zeros, int k_max,
                                                 const BigReal& tol);
// L_+(2) = -4 C L_-(1), and L_+(2k) from log phi against the continuation
std::vector<CheckItem> check_l_plus_even(const HBConstants& c, const ZeroModel& zeros, int k_max, const BigReal& tol);
std::vector<CheckItem> check_brute_force(const HBConstants& c, const ZeroModel& zeros, const BigReal& tol,
                                         int N = 100000);

struct IntegralityReport {
  int n_max = 0;
  int first_failure = -1;
  std::vector<ExactPolynomial> u;
};
// u_{n+1} = (4n+2)/(n+1) u_n (n(n+1) - lambda) + 4n b^2/(n+1) u_{n-1} in Q[b^2, lambda]
IntegralityReport check_integrality(int n_max);
CheckItem integrality_item(const IntegralityReport& r);

}  // namespace hb
