#include "hb/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hb {

BigReal condition_at(int N, const BigReal& a) {
  return legendre_condition(ground_eigenpair(build_matrix(N, a)));
}

namespace {

struct RootResult {
  BigReal a;
  int sign_changes = 0;
};

int count_sign_changes(int N, const BigReal& lo, const BigReal& hi, int pieces) {
  int changes = 0;
  int prev = condition_at(N, lo).sign();
  for (int k = 1; k <= pieces; ++k) {
    BigReal x = lo + (hi - lo) * static_cast<long>(k) / static_cast<long>(pieces);
    int s = condition_at(N, x).sign();
    if (s != 0 && prev != 0 && s != prev) ++changes;
    if (s != 0) prev = s;
  }
  return changes;
}

BigReal find_root(int N, BigReal lo, BigReal hi) {
  BigReal flo = condition_at(N, lo);
  BigReal fhi = condition_at(N, hi);
  if (flo.sign() == fhi.sign()) throw std::runtime_error("condition S(a) has no sign change on the bracket");
  BigReal coarse(1e-3);
  while (hi - lo > coarse) {
    BigReal mid = (lo + hi) / 2L;
    BigReal fm = condition_at(N, mid);
    if (fm.sign() == flo.sign()) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  BigReal tol = tenpow(-PrecisionScope::current_digits() + 3);
  BigReal x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
  for (int it = 0; it < 200; ++it) {
    BigReal x = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x > lo && x < hi)) x = (lo + hi) / 2L;
    BigReal fx = condition_at(N, x);
    if (fx.is_zero()) return x;
    if (fx.sign() == flo.sign()) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    BigReal step = abs(x - x1);
    x0 = x1;
    f0 = f1;
    x1 = x;
    f1 = fx;
    if (step < tol || hi - lo < tol) return x;
  }
  throw std::runtime_error("secant refinement of S(a) did not converge");
}

struct LadderResult {
  BigReal a;
  EigenPair pair;
  int N = 0;
  int sign_changes = 0;
  std::vector<int> ladder;
};

LadderResult run_ladder(int digits, const SolveOptions& opts) {
  BigReal lo(opts.bracket_lo), hi(opts.bracket_hi);
  LadderResult r;
  int N = opts.initial_N;
  BigReal agree = tenpow(-(digits + 5));
  if (opts.scan_bracket) r.sign_changes = count_sign_changes(N, lo, hi, 16);
  BigReal prev = find_root(N, lo, hi);
  r.ladder.push_back(N);
  while (true) {
    int next = 2 * N;
    if (next > opts.max_N) throw std::runtime_error("certification failed: truncation ladder exhausted");
    BigReal cur = find_root(next, lo, hi);
    r.ladder.push_back(next);
    if (abs(cur - prev) < agree) {
      r.a = cur;
      r.N = next;
      r.pair = ground_eigenpair(build_matrix(next, cur));
      return r;
    }
    prev = cur;
    N = next;
  }
}

}  // namespace

HBConstants solve_constants(int digits, const SolveOptions& opts) {
  if (digits < 10) throw std::invalid_argument("solve_constants needs digits >= 10");
  int guard = opts.guard > 0 ? opts.guard : PrecisionContext::for_sizes(digits, opts.max_N).guard;
  LadderResult low;
  {
    PrecisionScope scope(digits + guard);
    low = run_ladder(digits, opts);
  }
  PrecisionScope scope(digits + 2 * guard);
  SolveOptions hi_opts = opts;
  hi_opts.initial_N = low.N / 2;
  hi_opts.scan_bracket = false;
  LadderResult high = run_ladder(digits, hi_opts);
  BigReal pi = BigReal::pi();
  HBConstants c;
  c.a_star = high.a;
  c.lambda_star = high.pair.lambda;
  c.C = pi / (4L * c.a_star);
  c.L1 = -2L * c.C * c.lambda_star;
  c.xi = high.pair.xi;
  c.N = high.N;
  c.working_digits = digits + 2 * guard;
  c.bracket_sign_changes = low.sign_changes;
  c.ladder = low.ladder;
  BigReal C_low = pi / (4L * low.a);
  BigReal L_low = -2L * C_low * low.pair.lambda;
  BigReal tol = tenpow(-(digits + 2));
  if (abs(C_low - c.C) > tol || abs(L_low - c.L1) > tol)
    throw std::runtime_error("certification failed: the two working precisions disagree");
  c.digits_certified = digits;
  return c;
}

nlohmann::json to_json(const HBConstants& c) {
  int d = c.digits_certified;
  return nlohmann::json{{"C", c.C.str(d)},
                        {"L1", c.L1.str(d)},
                        {"a_star", c.a_star.str(d)},
                        {"lambda_star", c.lambda_star.str(d)},
                        {"N", c.N},
                        {"digits_certified", c.digits_certified}};
}

}  // namespace hb
