#include "hb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hb {

namespace {

std::mutex g_rule_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const GaussRule>> g_rules;

GaussRule compute_rule(int n) {
  GaussRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  BigReal eps = tenpow(-PrecisionScope::current_digits() - 2);
  BigReal pi = BigReal::pi();
  for (int i = 0; i < (n + 1) / 2; ++i) {
    BigReal x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    BigReal dp;
    for (int it = 0; it < 200; ++it) {
      BigReal p0(1L), p1 = x;
      for (int k = 1; k < n; ++k) {
        BigReal p2 = ((2L * k + 1) * x * p1 - static_cast<long>(k) * p0) / static_cast<long>(k + 1);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = static_cast<long>(n) * (x * p1 - p0) / (x * x - 1L);
      BigReal dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) break;
    }
    BigReal w = 2L / ((1L - x * x) * dp * dp);
    r.nodes[static_cast<size_t>(i)] = -x;
    r.nodes[static_cast<size_t>(n - 1 - i)] = x;
    r.weights[static_cast<size_t>(i)] = w;
    r.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[static_cast<size_t>(n / 2)] = BigReal(0L);
  return r;
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_legendre_rule(int nodes) {
  if (nodes < 2) throw std::invalid_argument("Gauss-Legendre needs at least 2 nodes");
  auto key = std::make_pair(nodes, PrecisionScope::current_bits());
  {
    std::lock_guard<std::mutex> lock(g_rule_mutex);
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussRule>(compute_rule(nodes));
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  return g_rules.emplace(key, rule).first->second;
}

BigReal gauss_legendre_integrate(const RealFunction& f, const BigReal& lo, const BigReal& hi, int nodes) {
  if (!(lo < hi)) throw std::invalid_argument("integration bounds must satisfy lo < hi");
  auto rule = gauss_legendre_rule(nodes);
  BigReal half = (hi - lo) / 2L;
  BigReal mid = (hi + lo) / 2L;
  BigReal s(0L);
  for (size_t i = 0; i < rule->nodes.size(); ++i) s += rule->weights[i] * f(mid + half * rule->nodes[i]);
  return s * half;
}

AdaptiveResult integrate_adaptive(const RealFunction& f, const BigReal& lo, const BigReal& hi, const BigReal& tol,
                                  int nodes, int max_depth) {
  if (!(lo < hi)) throw std::invalid_argument("integration bounds must satisfy lo < hi");
  AdaptiveResult res;
  int panels = 1;
  BigReal prev = gauss_legendre_integrate(f, lo, hi, nodes);
  for (int depth = 1; depth <= max_depth; ++depth) {
    panels *= 2;
    BigReal h = (hi - lo) / static_cast<long>(panels);
    BigReal cur(0L);
    for (int k = 0; k < panels; ++k) {
      BigReal a = lo + h * static_cast<long>(k);
      cur += gauss_legendre_integrate(f, a, a + h, nodes);
    }
    BigReal diff = abs(cur - prev);
    prev = cur;
    if (diff < tol) {
      res.value = cur;
      res.error_estimate = diff;
      res.panels = panels;
      return res;
    }
  }
  throw std::runtime_error("adaptive quadrature did not reach tolerance");
}

}  // namespace hb
