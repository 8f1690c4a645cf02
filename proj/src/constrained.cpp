#include "risopt/constrained.hpp"

#include <algorithm>
#include <cmath>

#include "risopt/errors.hpp"

namespace risopt {

void validate_partition(const SubarrayPartition& partition, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  if (partition.groups.empty())
    throw InvalidInputError("subarray partition has no groups");
  for (const auto& group : partition.groups) {
    if (group.empty()) throw InvalidInputError("subarray group is empty");
    for (std::size_t idx : group) {
      if (idx >= n)
        throw InvalidInputError("subarray index out of range (0-based)");
      if (seen[idx])
        throw InvalidInputError("subarray groups overlap");
      seen[idx] = 1;
      ++covered;
    }
  }
  if (covered != n)
    throw InvalidInputError("subarray groups do not cover every element");
}

AmplitudeProblem aggregate_subarrays(const AmplitudeProblem& prob,
                                     const SubarrayPartition& partition) {
  validate(prob);
  validate_partition(partition, prob.size());
  AmplitudeProblem agg;
  agg.h_d = prob.h_d;
  agg.snr1 = prob.snr1;
  agg.alpha.reserve(partition.groups.size());
  agg.beta.reserve(partition.groups.size());
  agg.gamma.reserve(partition.groups.size());
  for (const auto& group : partition.groups) {
    double a = 0.0, b = 0.0, g = 0.0;
    for (std::size_t idx : group) {
      a += prob.alpha[idx];
      b += prob.beta[idx];
      g += prob.gamma[idx];
    }
    agg.alpha.push_back(a);
    agg.beta.push_back(b);
    agg.gamma.push_back(g);
  }
  return agg;
}

std::vector<double> expand_subarrays(const SubarrayPartition& partition,
                                     const std::vector<double>& group_amplitudes,
                                     std::size_t n) {
  validate_partition(partition, n);
  if (group_amplitudes.size() != partition.groups.size())
    throw InvalidInputError("group amplitude count does not match partition");
  std::vector<double> p(n, 0.0);
  for (std::size_t m = 0; m < partition.groups.size(); ++m)
    for (std::size_t idx : partition.groups[m]) p[idx] = group_amplitudes[m];
  return p;
}

CapsSolution solve_per_element_caps(const AmplitudeProblem& prob,
                                    const CapVector& caps) {
  validate(prob);
  const std::size_t n = prob.size();
  if (caps.caps.size() != n)
    throw InvalidInputError("cap vector length does not match problem size");
  for (double c : caps.caps)
    if (!(c > 0.0) || !std::isfinite(c))
      throw InvalidInputError("caps must be positive and finite");

  const auto& a = prob.alpha;
  const auto& b = prob.beta;
  const auto& pb = caps.caps;

  // Fixed point: rho (h_d + sum alpha p) = 1 + sum beta p^2 with
  // p_k = min(alpha_k rho / beta_k, cap_k) rearranges to
  //   T(rho) = h_d rho + sum_k cap_k max(0, alpha_k rho - beta_k cap_k) = 1,
  // piecewise linear and nondecreasing with breakpoints beta cap / alpha.
  auto T = [&](double rho) {
    double acc = prob.h_d * rho;
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] > 0.0) acc += pb[k] * std::max(0.0, a[k] * rho - b[k] * pb[k]);
    return acc;
  };

  std::vector<double> brk;
  double slope_all = prob.h_d;   // slope past the last breakpoint
  double signal_weight = 0.0;    // sum alpha cap over active elements
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] > 0.0) {
      brk.push_back(b[k] * pb[k] / a[k]);
      slope_all += a[k] * pb[k];
      signal_weight += a[k] * pb[k];
    }
  }
  if (prob.h_d == 0.0 && signal_weight == 0.0)
    throw NoSignalError("no direct link and every alpha_n is zero");
  std::sort(brk.begin(), brk.end());

  double rho = 0.0;
  double lo = 0.0, hi = -1.0;
  for (double r : brk) {
    if (T(r) >= 1.0) {
      hi = r;
      break;
    }
    lo = r;
  }
  if (hi < 0.0) {
    // Beyond the last breakpoint every active element is capped:
    // T(rho) = slope_all * rho - sum beta cap^2 over active elements.
    double intercept = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] > 0.0) intercept -= b[k] * pb[k] * pb[k];
    rho = (1.0 - intercept) / slope_all;
  } else {
    const double t_lo = T(lo), t_hi = T(hi);
    rho = t_hi > t_lo ? lo + (1.0 - t_lo) * (hi - lo) / (t_hi - t_lo) : lo;
  }

  CapsSolution out;
  out.rho = rho;
  out.amplitudes.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] > 0.0) out.amplitudes[k] = std::min(a[k] * rho / b[k], pb[k]);
  return out;
}

}  // namespace risopt
