#include "hb/fourier.hpp"
#include "hb/quadrature.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

namespace hb {

BigReal FourierModel::h(const BigReal& u) const {
  BigReal x = 1L - u, s(0L);
  for (size_t n = h_coeffs.size(); n-- > 1;) s = (s + h_coeffs[n]) * x;
  return s;
}

BigReal FourierModel::c_basis(const BigReal& u, int degree) const {
  int top = degree < 0 ? static_cast<int>(c_coeffs.size()) - 1 : std::min(degree, static_cast<int>(c_coeffs.size()) - 1);
  BigReal w = 1L - u * u, s(0L);
  for (int n = top; n >= 1; --n) s = (s + c_coeffs[static_cast<size_t>(n)]) * w;
  return s;
}

BigReal FourierModel::legendre(const BigReal& u) const { return clenshaw_legendre(legendre_coeffs, u); }

BigReal clenshaw_legendre(const std::vector<BigReal>& coeffs, const BigReal& x) {
  BigReal b1(0L), b2(0L);
  for (size_t k = coeffs.size(); k-- > 0;) {
    long kk = static_cast<long>(k);
    BigReal b0 = coeffs[k] + x * b1 * (2 * kk + 1) / (kk + 1) - b2 * (kk + 1) / (kk + 2);
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return b1;
}

FourierModel build_h(const HBConstants& c, int N_terms) {
  if (N_terms < 2) throw std::invalid_argument("build_h needs at least two terms");
  TaylorModel Phi = taylor_Phi_stable(c, N_terms - 1);
  PrecisionScope scope(c.working_digits);
  Series sq = series_multiply(Phi.coeffs, Phi.coeffs, N_terms - 1);
  FourierModel m;
  m.working_digits = c.working_digits;
  m.h_coeffs.assign(static_cast<size_t>(N_terms + 1), BigReal(0L));
  BigReal pi = BigReal::pi();
  BigReal scale = pi;  // pi / (n! (2C)^n)
  BigReal twoC = 2L * c.C;
  for (int n = 1; n <= N_terms; ++n) {
    scale /= twoC * static_cast<long>(n);
    m.h_coeffs[static_cast<size_t>(n)] = sq[n - 1] * scale;
  }
  return m;
}

std::vector<BigReal> legendre_transform_model(const HBConstants& c, int K) {
  TaylorModel phi = taylor_phi_stable(c, K / 2 + 1);
  PrecisionScope scope(c.working_digits);
  BigReal pi2 = BigReal::pi() * BigReal::pi();
  std::vector<BigReal> mom(static_cast<size_t>(K + 1), BigReal(0L));
  BigReal f(1L), p(1L);
  for (int k = 0; 2 * k <= K; ++k) {
    if (k > 0) {
      f *= static_cast<long>(2 * k - 1) * (2 * k);
      p *= pi2;
    }
    BigReal v = 2L * f * phi.coeffs[2 * k] / p;
    mom[static_cast<size_t>(2 * k)] = k % 2 ? -v : v;
  }
  // monomial coefficients of P_n, exact
  std::vector<std::vector<mpq_class>> P(static_cast<size_t>(K + 1));
  P[0] = {mpq_class(1)};
  if (K >= 1) P[1] = {mpq_class(0), mpq_class(1)};
  for (int n = 1; n < K; ++n) {
    auto& next = P[static_cast<size_t>(n + 1)];
    next.assign(static_cast<size_t>(n + 2), mpq_class(0));
    for (int j = 0; j <= n; ++j) next[static_cast<size_t>(j + 1)] += mpq_class(2 * n + 1, n + 1) * P[static_cast<size_t>(n)][static_cast<size_t>(j)];
    for (int j = 0; j < n; ++j) next[static_cast<size_t>(j)] -= mpq_class(n, n + 1) * P[static_cast<size_t>(n - 1)][static_cast<size_t>(j)];
  }
  std::vector<BigReal> out(static_cast<size_t>(K + 1), BigReal(0L));
  for (int n = 0; n <= K; n += 2) {
    BigReal s(0L);
    for (int j = 0; j <= n; j += 2) {
      const mpq_class& q = P[static_cast<size_t>(n)][static_cast<size_t>(j)];
      s += BigReal::from_mpq(q.get_mpq_t()) * mom[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(n)] = s * static_cast<long>(2 * n + 1) / 2L;
  }
  return out;
}

namespace {

std::vector<BigReal> chebyshev_grid(int n) {
  std::vector<BigReal> g;
  BigReal pi = BigReal::pi();
  for (int j = 0; j < n; ++j) g.push_back(cos(pi * (2L * j + 1) / (2L * n)));
  return g;
}

}  // namespace

BigReal c_basis_residual(const FourierModel& model, int grid) {
  PrecisionScope scope(model.working_digits);
  BigReal worst(0L);
  for (const auto& u : chebyshev_grid(grid)) worst = max(worst, abs(model.c_basis(u) - model.h(u)));
  return worst;
}

std::vector<BigReal> c_basis_coefficients(const FourierModel& model, int K, const BigReal& tol) {
  int H = static_cast<int>(model.h_coeffs.size()) - 1;
  if (K > H) throw std::invalid_argument("c_basis_coefficients: K exceeds the h expansion");
  PrecisionScope scope(model.working_digits);
  // s(w) = 1 - sqrt(1 - w) = sum_{k>=1} s_k w^k
  std::vector<BigReal> s(static_cast<size_t>(K + 1), BigReal(0L));
  BigReal b(1L);  // binom(1/2, k) (-1)^k
  for (int k = 1; k <= K; ++k) {
    b = b * (2L * k - 3) / (2L * k);
    s[static_cast<size_t>(k)] = -b;
  }
  Series sw(0, s, Parity::none, K);
  std::vector<BigReal> cc(static_cast<size_t>(K + 1), BigReal(0L));
  Series pw = sw;
  for (int n = 1; n <= K; ++n) {
    if (n > 1) pw = series_multiply(pw, sw, K);
    for (int j = n; j <= K; ++j) cc[static_cast<size_t>(j)] += model.h_coeffs[static_cast<size_t>(n)] * pw[j];
  }
  FourierModel probe = model;
  probe.c_coeffs = cc;
  BigReal res = c_basis_residual(probe, 64);
  if (res > tol) throw std::runtime_error("c-basis reconstruction residual " + res.sci(4) + " above tolerance");
  return cc;
}

TruncationReport c_basis_truncation(const FourierModel& model, int degree, int grid) {
  PrecisionScope scope(model.working_digits);
  auto g = chebyshev_grid(grid);
  TruncationReport r;
  r.truncation_error = BigReal(0L);
  for (const auto& u : g) r.truncation_error = max(r.truncation_error, abs(model.c_basis(u, degree) - model.h(u)));
  // normal equations
  size_t d = static_cast<size_t>(degree);
  std::vector<std::vector<BigReal>> A(d, std::vector<BigReal>(d + 1, BigReal(0L)));
  for (const auto& u : g) {
    BigReal w = 1L - u * u;
    std::vector<BigReal> phi(d);
    BigReal p = w;
    for (size_t i = 0; i < d; ++i) {
      phi[i] = p;
      p *= w;
    }
    BigReal hu = model.h(u);
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < d; ++j) A[i][j] += phi[i] * phi[j];
      A[i][d] += phi[i] * hu;
    }
  }
  for (size_t col = 0; col < d; ++col) {
    size_t piv = col;
    for (size_t i = col + 1; i < d; ++i)
      if (abs(A[i][col]) > abs(A[piv][col])) piv = i;
    std::swap(A[col], A[piv]);
    for (size_t i = 0; i < d; ++i) {
      if (i == col) continue;
      BigReal f = A[i][col] / A[col][col];
      for (size_t j = col; j <= d; ++j) A[i][j] -= f * A[col][j];
    }
  }
  FourierModel fit;
  fit.c_coeffs.assign(d + 1, BigReal(0L));
  for (size_t i = 0; i < d; ++i) fit.c_coeffs[i + 1] = A[i][d] / A[i][i];
  r.least_squares_error = BigReal(0L);
  for (const auto& u : g) r.least_squares_error = max(r.least_squares_error, abs(fit.c_basis(u) - model.h(u)));
  r.least_squares_coeffs = fit.c_coeffs;
  return r;
}

KappaConstants kappa_constants(const HBConstants& c) {
  PrecisionScope scope(c.working_digits);
  Complex w = phi_eigenfunction(c).endpoint_sum();
  BigReal pi = BigReal::pi();
  Complex ip = Complex::i() / pi;
  KappaConstants k;
  k.plus = ip * w.conj();
  k.minus = -(ip * w);
  BigReal a = 1L / (2L * c.C), b = pi / 2L;
  Complex target = Complex::i() * (a / (2L * b));
  k.involution_residual = (k.plus * k.plus - k.minus * k.minus - target).abs();
  BigReal mod = 1L / sqrt(4L * pi * c.C);
  Complex ep = Complex::polar(BigReal(1L), pi / 4L);
  k.closed_form_residual = max((k.plus - mod * ep).abs(), (k.minus - mod * ep.conj()).abs());
  k.admissibility_residual = (k.plus * ep + k.minus * ep.conj()).abs();
  return k;
}

BigReal parseval_value(const FourierModel& model) {
  PrecisionScope scope(model.working_digits);
  BigReal s(0L), p(2L);
  for (size_t n = 1; n < model.h_coeffs.size(); ++n) {
    p *= 2L;
    s += model.h_coeffs[n] * p / static_cast<long>(n + 1);
  }
  return s / 2L;
}

QuadratureOracle quadrature_transform(const HBConstants& c, const std::vector<BigReal>& us, int X, int nodes,
                                      int digits) {
  PrecisionScope scope(digits);
  LegendreEigenfunction g = phi_eigenfunction(c);
  auto rule = gauss_legendre_rule(nodes);
  BigReal pi = BigReal::pi();
  QuadratureOracle q;
  q.u = us;
  q.X = BigReal(static_cast<long>(X));
  q.value.assign(us.size(), BigReal(0L));
  auto panel = [&](const BigReal& lo, const BigReal& hi) {
    BigReal mid = (lo + hi) / 2L, half = (hi - lo) / 2L;
    for (int i = 0; i < nodes; ++i) {
      BigReal x = mid + half * rule->nodes[static_cast<size_t>(i)];
      BigReal wx = half * rule->weights[static_cast<size_t>(i)];
      BigReal f = Phi_real(g, x) * Phi_real(g, -x) * wx;
      for (size_t k = 0; k < us.size(); ++k) q.value[k] += f * cos(pi * us[k] * x);
    }
  };
  panel(BigReal(0L), BigReal(0.5));
  for (int n = 0; n + 1 < X; ++n) panel(BigReal(n) + BigReal(0.5), BigReal(n) + BigReal(1.5));
  panel(BigReal(X) - BigReal(0.5), BigReal(X));
  for (auto& v : q.value) v *= 2L;
  // phi(x) ~ -cos(pi x)/(2 pi C x^2); integration by parts at frequencies
  // pi(1 -+ u), with a factor 2 for the next asymptotic order
  BigReal worst(0L);
  for (const auto& u : us) {
    BigReal lowf = pi * (1L - abs(u));
    worst = max(worst, 1L / lowf);
  }
  BigReal XX = q.X * q.X;
  q.tail_bound = 8L / (2L * pi * c.C * XX) * worst;
  return q;
}

nlohmann::json fourier_json(const std::string& basis, const std::vector<BigReal>& coeffs, int digits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : coeffs) arr.push_back(v.sci(digits));
  return {{"basis", basis}, {"coeffs", arr}, {"digits", digits}};
}

std::string transform_csv(const FourierModel& model, int points, int digits) {
  PrecisionScope scope(model.working_digits);
  std::ostringstream os;
  os << "xi,phi_hat\n";
  for (int j = 0; j < points; ++j) {
    BigReal u = -1L + 2L * BigReal(static_cast<long>(j)) / static_cast<long>(points - 1);
    os << u.sci(digits) << ',' << model.h(u).sci(digits) << '\n';
  }
  return os.str();
}

}  // namespace hb
