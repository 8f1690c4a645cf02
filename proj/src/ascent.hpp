#pragma once

// Internal helpers shared by the Dinkelbach baseline and the brute-force
// checker: Euclidean projection onto the power ellipsoid and a monotone
// projected gradient ascent with backtracking line search.

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "risopt/kernels.hpp"
#include "root_find.hpp"

namespace risopt::detail {

// Nearest point of {q : sum gamma_n q_n^2 <= 1} to p. The projection is
// q_n = p_n / (1 + mu * gamma_n) where mu >= 0 makes the constraint tight.
inline std::vector<double> project_ellipsoid(std::vector<double> p,
                                             const std::vector<double>& gamma) {
  if (kernels::weighted_sumsq(gamma, p) <= 1.0) return p;
  auto eval = [&](double mu) {
    double value = 0.0, slope = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      const double den = 1.0 + mu * gamma[n];
      const double q = p[n] / den;
      value += gamma[n] * q * q;
      slope += -2.0 * gamma[n] * gamma[n] * q * q / den;
    }
    return std::pair{value, slope};
  };
  const auto root = decreasing_root(eval, 0.0, 1.0, 1e-14, 200,
                                    "ellipsoid projection root search stalled");
  for (std::size_t n = 0; n < p.size(); ++n) p[n] /= 1.0 + root.x * gamma[n];
  return p;
}

inline std::vector<double> clamp_box(std::vector<double> p,
                                     const std::vector<double>& caps) {
  for (std::size_t n = 0; n < p.size(); ++n) {
    if (p[n] < 0.0) p[n] = 0.0;
    if (p[n] > caps[n]) p[n] = caps[n];
  }
  return p;
}

struct AscentResult {
  std::vector<double> p;
  double value = 0.0;
  int iterations = 0;
};

// Maximizes eval's value over the feasible set given by `project`.
// eval(p) returns {value, gradient}. Steps only ever increase the value,
// so the routine is a safe local maximizer even off the concave case.
inline AscentResult projected_ascent(
    const std::function<std::pair<double, std::vector<double>>(
        const std::vector<double>&)>& eval,
    std::vector<double> p0,
    const std::function<std::vector<double>(std::vector<double>)>& project,
    int max_iters = 5000, double tol = 1e-10) {
  std::vector<double> p = project(std::move(p0));
  double step = 1.0;
  auto [f0, grad] = eval(p);
  AscentResult out;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<double> cand;
    double f1 = f0;
    while (true) {
      cand = p;
      for (std::size_t n = 0; n < cand.size(); ++n) cand[n] += step * grad[n];
      cand = project(std::move(cand));
      double along = 0.0;
      for (std::size_t n = 0; n < cand.size(); ++n)
        along += grad[n] * (cand[n] - p[n]);
      f1 = eval(cand).first;
      if (f1 >= f0 + 1e-4 * along || step < 1e-18) break;
      step *= 0.5;
    }
    if (f1 < f0) {  // line search exhausted; keep the better iterate
      out.iterations = it + 1;
      break;
    }
    double move_sq = 0.0, norm_sq = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
      const double d = cand[n] - p[n];
      move_sq += d * d;
      norm_sq += cand[n] * cand[n];
    }
    p = std::move(cand);
    out.iterations = it + 1;
    f0 = f1;
    grad = eval(p).second;
    if (std::sqrt(move_sq) <= tol * std::max(1.0, std::sqrt(norm_sq))) break;
    step = std::min(step * 2.0, 1e12);
  }
  out.p = std::move(p);
  out.value = f0;
  return out;
}

}  // namespace risopt::detail
