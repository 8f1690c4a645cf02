#include "risopt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "risopt/errors.hpp"
#include "risopt/kernels.hpp"
#include "root_find.hpp"

namespace risopt {

namespace {

// Relative threshold below which a direct link is routed to the h_d = 0
// closed form: the secular path stays stable but the closed form is exact.
constexpr double kDirectLinkCutoff = 1e-14;

double max_alpha(const AmplitudeProblem& prob) {
  double m = 0.0;
  for (double a : prob.alpha) m = std::max(m, a);
  return m;
}

bool direct_link_negligible(const AmplitudeProblem& prob) {
  return prob.h_d <= kDirectLinkCutoff * max_alpha(prob);
}

// sum alpha_n^2 gamma_n / beta_n^2 with zero-alpha elements contributing 0.
double stationary_condition_sum(const AmplitudeProblem& prob) {
  double acc = 0.0;
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0) {
      const double r = prob.alpha[n] / prob.beta[n];
      acc += r * r * prob.gamma[n];
    }
  }
  return acc;
}

// Arrays for the secular sums, compacted to alpha_n > 0 so denominators
// stay positive, plus the original indices for scattering the result back.
struct SecularArrays {
  std::vector<double> s;  // alpha^2 * gamma
  std::vector<double> b;  // beta
  std::vector<double> d;  // beta + gamma
  std::vector<std::size_t> index;
};

SecularArrays gather_secular(const AmplitudeProblem& prob) {
  SecularArrays arr;
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0) {
      arr.s.push_back(prob.alpha[n] * prob.alpha[n] * prob.gamma[n]);
      arr.b.push_back(prob.beta[n]);
      arr.d.push_back(prob.beta[n] + prob.gamma[n]);
      arr.index.push_back(n);
    }
  }
  return arr;
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::NoDirectClosedForm: return "NoDirectClosedForm";
    case Regime::StationaryHighDirect: return "StationaryHighDirect";
    case Regime::SecularNewton: return "SecularNewton";
  }
  return "unknown";
}

std::vector<double> solve_no_direct(const AmplitudeProblem& prob) {
  validate(prob);
  double scale_sq = 0.0;  // sum alpha^2 gamma / (beta+gamma)^2
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0) {
      const double r = prob.alpha[n] / (prob.beta[n] + prob.gamma[n]);
      scale_sq += r * r * prob.gamma[n];
    }
  }
  if (scale_sq == 0.0)
    throw NoSignalError("no direct link and every alpha_n is zero");
  const double inv_scale = 1.0 / std::sqrt(scale_sq);
  std::vector<double> p(prob.size(), 0.0);
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0)
      p[n] = prob.alpha[n] / (prob.beta[n] + prob.gamma[n]) * inv_scale;
  }
  return p;
}

std::vector<double> solve_stationary(const AmplitudeProblem& prob) {
  validate(prob);
  if (!(prob.h_d > 0.0) ||
      stationary_condition_sum(prob) > prob.h_d * prob.h_d * (1.0 + 1e-12))
    throw std::logic_error("solve_stationary called outside its regime");
  std::vector<double> p(prob.size(), 0.0);
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0) p[n] = prob.alpha[n] / (prob.h_d * prob.beta[n]);
  }
  return p;
}

SecularRoot secular_root(const AmplitudeProblem& prob, double tol) {
  validate(prob);
  const double hd = prob.h_d;
  if (!(hd > 0.0)) throw InvalidInputError("secular_root requires h_d > 0");
  const SecularArrays arr = gather_secular(prob);

  double start_sq = 0.0;  // sum s / d^2
  for (std::size_t i = 0; i < arr.s.size(); ++i)
    start_sq += arr.s[i] / (arr.d[i] * arr.d[i]);
  const double eta0 = std::max(0.0, std::sqrt(start_sq) / hd - 1.0);

  const double target = hd * hd;
  auto eval = [&](double eta) {
    const auto sums = kernels::secular_sums(arr.s, arr.b, arr.d, eta);
    return std::pair{sums.pow2, -2.0 * sums.pow3};
  };
  auto root = detail::decreasing_root(eval, eta0, target,
                                      tol * std::max(1.0, target), 100,
                                      "secular equation Newton hit its iteration cap");

  // One polish step: quadratic convergence puts the residual at the
  // floating-point floor rather than just under tolerance.
  const auto sums = kernels::secular_sums(arr.s, arr.b, arr.d, root.x);
  const double err = sums.pow2 - target;
  const double polished = root.x - err / (-2.0 * sums.pow3);
  if (std::isfinite(polished) && polished >= root.x) {
    root.x = polished;
    root.iterates.push_back(polished);
    ++root.iterations;
  }
  root.residual = std::abs(kernels::secular_sums(arr.s, arr.b, arr.d, root.x).pow2 - target);

  SecularRoot out;
  out.eta = root.x;
  out.iterations = root.iterations;
  out.residual = root.residual;
  out.iterates = std::move(root.iterates);
  return out;
}

std::vector<double> solve_with_direct(const AmplitudeProblem& prob, double eta) {
  validate(prob);
  if (!(prob.h_d > 0.0) || !(eta >= 0.0))
    throw InvalidInputError("solve_with_direct requires h_d > 0 and eta >= 0");
  std::vector<double> p(prob.size(), 0.0);
  for (std::size_t n = 0; n < prob.size(); ++n) {
    if (prob.alpha[n] > 0.0) {
      const double den = prob.beta[n] + eta * (prob.beta[n] + prob.gamma[n]);
      p[n] = prob.alpha[n] / (prob.h_d * den);
    }
  }
  return p;
}

SolveReport solve(const AmplitudeProblem& prob, double tol) {
  validate(prob);
  SolveReport report;

  if (direct_link_negligible(prob)) {
    if (max_alpha(prob) == 0.0) {
      // Nothing the surface can do and no direct link: zero-objective report.
      report.regime = Regime::NoDirectClosedForm;
      report.amplitudes.assign(prob.size(), 0.0);
      report.objective = reduced_objective(prob, report.amplitudes);
      report.receive_snr = report.objective * prob.snr1;
      return report;
    }
    report.regime = Regime::NoDirectClosedForm;
    report.amplitudes = solve_no_direct(prob);
  } else if (stationary_condition_sum(prob) <= prob.h_d * prob.h_d) {
    report.regime = Regime::StationaryHighDirect;
    report.amplitudes = solve_stationary(prob);
  } else {
    report.regime = Regime::SecularNewton;
    auto root = secular_root(prob, tol);
    report.amplitudes = solve_with_direct(prob, root.eta);
    report.eta = root.eta;
    report.newton_iterations = root.iterations;
    report.residual = root.residual;
  }

  report.objective = reduced_objective(prob, report.amplitudes);
  report.receive_snr = report.objective * prob.snr1;
  return report;
}

}  // namespace risopt
