#pragma once

#include "hb/bigreal.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace hb {

using RealFunction = std::function<BigReal(const BigReal&)>;

struct GaussRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
};

// nodes/weights on [-1, 1] at the calling thread's precision, cached
std::shared_ptr<const GaussRule> gauss_legendre_rule(int nodes);

BigReal gauss_legendre_integrate(const RealFunction& f, const BigReal& lo, const BigReal& hi, int nodes);

struct AdaptiveResult {
  BigReal value;
  BigReal error_estimate;
  int panels = 0;
};

// halves the interval until two successive refinements agree to tol
AdaptiveResult integrate_adaptive(const RealFunction& f, const BigReal& lo, const BigReal& hi, const BigReal& tol,
                                  int nodes = 20, int max_depth = 30);

}  // namespace hb
