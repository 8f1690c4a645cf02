#pragma once

// Internal: safeguarded Newton for a strictly decreasing function on
// [x0, inf) with f(x0) >= target. Newton steps that would leave the current
// bracket fall back to bisection (doubling the upper end until it brackets).
// For convex f the Newton iterates approach the root monotonically from the
// left and the safeguard never fires; it exists for rounding robustness.

#include <cmath>
#include <limits>
#include <vector>

#include "risopt/errors.hpp"

namespace risopt::detail {

struct RootResult {
  double x = 0.0;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> iterates;
};

// Eval: double -> {value, derivative}
template <typename Eval>
RootResult decreasing_root(Eval&& eval, double x0, double target, double tol,
                           int max_iters, const char* what) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double lo = x0;      // f(lo) >= target
  double hi = inf;     // f(hi) < target once known
  double x = x0;
  RootResult out;
  out.iterates.push_back(x);
  for (int it = 0; it < max_iters; ++it) {
    const auto [value, deriv] = eval(x);
    const double err = value - target;
    out.residual = std::abs(err);
    if (out.residual <= tol) {
      out.x = x;
      out.iterations = it;
      return out;
    }
    if (err > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = (deriv != 0.0) ? x - err / deriv : inf;
    const bool inside = std::isfinite(next) && next > lo && (hi == inf || next < hi);
    if (!inside) {
      next = (hi == inf) ? (lo > 0.0 ? 2.0 * lo : 1.0) : 0.5 * (lo + hi);
    }
    if (next == x) {  // no representable progress; accept the floor
      out.x = x;
      out.iterations = it + 1;
      return out;
    }
    x = next;
    out.iterates.push_back(x);
  }
  throw ConvergenceError(what, x, max_iters);
}

}  // namespace risopt::detail
