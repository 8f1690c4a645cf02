#include "risopt/model.hpp"

#include <cmath>
#include <numbers>

#include "risopt/errors.hpp"
#include "risopt/kernels.hpp"

namespace risopt {

namespace {

double magnitude(Complex z) {
  const double m = std::abs(z);
  return m < kZeroMagnitude ? 0.0 : m;
}

double canonical_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // guard the wrap-around rounding case
  return r;
}

double angle_or_zero(Complex z) {
  return magnitude(z) == 0.0 ? 0.0 : std::arg(z);
}

}  // namespace

NormalizedScenario normalize(const Scenario& s) {
  if (s.h1.empty() || s.h1.size() != s.h2.size())
    throw InvalidInputError("scenario channels must be nonempty and equally long");
  if (!(s.sigma1_sq > 0.0) || !(s.sigma2_sq > 0.0))
    throw InvalidInputError("noise variances must be strictly positive");
  if (!(s.P1 >= 0.0) || !(s.P2 >= 0.0))
    throw InvalidInputError("powers must be nonnegative");

  NormalizedScenario ns;
  ns.snr1 = s.P1 / s.sigma1_sq;
  ns.snr2 = s.P2 / s.sigma2_sq;
  ns.h_d = s.h_d * std::sqrt(s.sigma1_sq / s.sigma2_sq);
  ns.h1 = s.h1;
  ns.h2 = s.h2;
  return ns;
}

std::vector<double> optimal_phases(const NormalizedScenario& ns) {
  if (ns.h1.empty() || ns.h1.size() != ns.h2.size())
    throw InvalidInputError("channels must be nonempty and equally long");
  const double direct_angle = angle_or_zero(ns.h_d);
  std::vector<double> phases(ns.size());
  for (std::size_t n = 0; n < ns.size(); ++n) {
    phases[n] =
        canonical_angle(direct_angle - angle_or_zero(ns.h2[n]) - angle_or_zero(ns.h1[n]));
  }
  return phases;
}

AmplitudeProblem reduce(const NormalizedScenario& ns) {
  if (ns.h1.empty() || ns.h1.size() != ns.h2.size())
    throw InvalidInputError("channels must be nonempty and equally long");
  if (ns.snr2 == 0.0)
    throw DegenerateBudgetError(
        "snr2 = 0: no surface power budget; fall back to the direct link");
  if (!(ns.snr1 >= 0.0) || !(ns.snr2 > 0.0))
    throw InvalidInputError("SNR constants must be nonnegative");

  AmplitudeProblem prob;
  const std::size_t n_elems = ns.size();
  prob.h_d = magnitude(ns.h_d);
  prob.snr1 = ns.snr1;
  prob.alpha.resize(n_elems);
  prob.beta.resize(n_elems);
  prob.gamma.resize(n_elems);
  for (std::size_t n = 0; n < n_elems; ++n) {
    const double m1 = magnitude(ns.h1[n]);
    const double m2 = magnitude(ns.h2[n]);
    prob.alpha[n] = m1 * m2;
    prob.beta[n] = m2 * m2;
    prob.gamma[n] = (m1 * m1 * ns.snr1 + 1.0) / ns.snr2;
  }
  return prob;
}

double reduced_objective(const AmplitudeProblem& prob, std::span<const double> p) {
  if (p.size() != prob.size())
    throw InvalidInputError("amplitude vector length mismatch");
  const double signal = prob.h_d + kernels::dot(prob.alpha, p);
  const double noise = 1.0 + kernels::weighted_sumsq(prob.beta, p);
  return signal * signal / noise;
}

double receive_snr(const AmplitudeProblem& prob, std::span<const double> p) {
  return reduced_objective(prob, p) * prob.snr1;
}

double power_margin(const AmplitudeProblem& prob, std::span<const double> p) {
  if (p.size() != prob.size())
    throw InvalidInputError("amplitude vector length mismatch");
  return 1.0 - kernels::weighted_sumsq(prob.gamma, p);
}

double objective_on_ray(double h_d, double alpha1, double beta1, double p1) {
  const double signal = h_d + alpha1 * p1;
  return signal * signal / (1.0 + beta1 * p1 * p1);
}

void validate(const AmplitudeProblem& prob) {
  const std::size_t n = prob.size();
  if (n == 0) throw InvalidInputError("amplitude problem is empty");
  if (prob.beta.size() != n || prob.gamma.size() != n)
    throw InvalidInputError("alpha/beta/gamma length mismatch");
  if (!(prob.h_d >= 0.0)) throw InvalidInputError("h_d must be nonnegative");
  if (!(prob.snr1 >= 0.0)) throw InvalidInputError("snr1 must be nonnegative");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(prob.alpha[i] >= 0.0) || !(prob.beta[i] >= 0.0))
      throw InvalidInputError("alpha and beta must be nonnegative");
    if (!(prob.gamma[i] > 0.0))
      throw InvalidInputError("gamma must be strictly positive");
    if (prob.beta[i] == 0.0 && prob.alpha[i] > 0.0)
      throw InvalidInputError("beta_n = 0 requires alpha_n = 0");
  }
}

}  // namespace risopt
