#pragma once

#include "hb/hb_function.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hb {

// Transform of phi in the normalized frequency u = xi / pi on [-1, 1]:
// h(u) = sum_{n>=1} h_n (1-u)^n = sum_{n>=1} c_n (1-u^2)^n = sum_n l_n P_n(u)
struct FourierModel {
  std::vector<BigReal> h_coeffs;         // index n, h_coeffs[0] = 0
  std::vector<BigReal> c_coeffs;         // index n, c_coeffs[0] = 0
  std::vector<BigReal> legendre_coeffs;  // index n
  int working_digits = 0;

  BigReal h(const BigReal& u) const;
  BigReal c_basis(const BigReal& u, int degree = -1) const;
  BigReal legendre(const BigReal& u) const;
};

// h_n = pi [z^{n-1}] Phi^2 / (n! (2C)^n)
FourierModel build_h(const HBConstants& c, int N_terms);
// coefficients l_0..l_K from the moments int h(u) u^j du = 2 (-1)^k (2k)! u_k / pi^{2k}, j = 2k
std::vector<BigReal> legendre_transform_model(const HBConstants& c, int K);
BigReal clenshaw_legendre(const std::vector<BigReal>& coeffs, const BigReal& x);

// c_1..c_K through 1 - z = 1 - sqrt(1 - w), w = 1 - z^2; throws if the
// reconstruction residual on a Chebyshev grid exceeds tol
std::vector<BigReal> c_basis_coefficients(const FourierModel& model, int K, const BigReal& tol);
BigReal c_basis_residual(const FourierModel& model, int grid);
// sup-norm error on a Chebyshev grid of the degree-d truncation and of the
// least-squares fit in the (1-u^2)^n basis
struct TruncationReport {
  BigReal truncation_error;
  BigReal least_squares_error;
  std::vector<BigReal> least_squares_coeffs;
};
TruncationReport c_basis_truncation(const FourierModel& model, int degree, int grid);

struct KappaConstants {
  Complex plus;
  Complex minus;
  BigReal involution_residual;   // |k+^2 - k-^2 - ia/(2b)|
  BigReal closed_form_residual;  // max |k+- - e^{+-i pi/4}/sqrt(4 pi C)|
  BigReal admissibility_residual;  // |k+ e^{i pi/4} + k- e^{-i pi/4}|
};
// from w = sum i^n xi_n: k+ = (i/pi) conj(w), k- = -(i/pi) w
KappaConstants kappa_constants(const HBConstants& c);

// (1/2) int_{-1}^{1} h(u) du, equal to phi(0) = 1
BigReal parseval_value(const FourierModel& model);

struct QuadratureOracle {
  std::vector<BigReal> u;
  std::vector<BigReal> value;
  BigReal tail_bound;
  BigReal X;
};
// 2 int_0^X Phi(x)Phi(-x) cos(pi u x) dx on unit panels plus the tail bound
// from phi(x) ~ -cos(pi x)/(2 pi C x^2)
QuadratureOracle quadrature_transform(const HBConstants& c, const std::vector<BigReal>& us, int X, int nodes = 10,
                                      int digits = 30);

nlohmann::json fourier_json(const std::string& basis, const std::vector<BigReal>& coeffs, int digits);
std::string transform_csv(const FourierModel& model, int points, int digits);

}  // namespace hb
