#include "risopt/baselines.hpp"

#include <cmath>
#include <utility>

#include "ascent.hpp"
#include "risopt/errors.hpp"
#include "risopt/kernels.hpp"
#include "root_find.hpp"

namespace risopt {

namespace {

double norm_sq(const std::vector<Complex>& h) {
  double acc = 0.0;
  for (const Complex& v : h) acc += std::norm(v);
  return acc;
}

std::vector<double> standard_start(const AmplitudeProblem& prob) {
  const double g = kernels::sum(prob.gamma);
  return std::vector<double>(prob.size(), 1.0 / std::sqrt(g));
}

}  // namespace

double relay_optimum_snr(const NormalizedScenario& norm) {
  const double a = norm_sq(norm.h1) * norm.snr1;
  const double b = norm_sq(norm.h2) * norm.snr2;
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b / (a + b + 1.0);
}

EqualAmplitudeResult equal_amplitude(const AmplitudeProblem& prob) {
  validate(prob);
  EqualAmplitudeResult out;
  out.p = 1.0 / std::sqrt(kernels::sum(prob.gamma));
  out.snr = receive_snr(prob, std::vector<double>(prob.size(), out.p));
  return out;
}

double ao_rho_update(double xi) {
  return 0.5 * (xi * xi + xi * std::sqrt(xi * xi + 4.0));
}

double ao_w_update(double f_hat, double t_hat, double rho) {
  return std::sqrt(1.0 + rho) * f_hat / (f_hat * f_hat + t_hat);
}

std::vector<double> ao_amplitude_step(const AmplitudeProblem& prob, double rho,
                                      double w) {
  // Maximize 2 sqrt(1+rho) w (h_d + a.p) - w^2 ((h_d + a.p)^2 + 1 + sum b p^2)
  // over sum g p^2 <= 1. The Hessian is -2 w^2 (a a^T + diag(b)): diagonal
  // plus rank one, so the KKT system solves in closed form per multiplier mu:
  //   p_n(mu) = k a_n / ((1 + A s(mu)) (A b_n + mu g_n)),
  // with A = w^2, k = sqrt(1+rho) w - w^2 h_d and s(mu) = sum a_n^2/(A b_n + mu g_n).
  const double A = w * w;
  const double k = std::sqrt(1.0 + rho) * w - A * prob.h_d;
  std::vector<double> p(prob.size(), 0.0);
  if (!(A > 0.0) || !(k > 0.0)) return p;  // surface cannot help this round

  const auto& a = prob.alpha;
  const auto& b = prob.beta;
  const auto& g = prob.gamma;
  auto amplitudes_at = [&](double mu) {
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n)
      if (a[n] > 0.0) s += a[n] * a[n] / (A * b[n] + mu * g[n]);
    const double t = 1.0 + A * s;
    std::vector<double> q(a.size(), 0.0);
    for (std::size_t n = 0; n < a.size(); ++n)
      if (a[n] > 0.0) q[n] = k * a[n] / (t * (A * b[n] + mu * g[n]));
    return q;
  };

  p = amplitudes_at(0.0);
  if (kernels::weighted_sumsq(g, p) <= 1.0) return p;

  auto eval = [&](double mu) {
    double s = 0.0, sp = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (a[n] > 0.0) {
        const double den = A * b[n] + mu * g[n];
        s += a[n] * a[n] / den;
        sp += -a[n] * a[n] * g[n] / (den * den);
      }
    }
    const double t = 1.0 + A * s;
    const double tp = A * sp;
    double value = 0.0, slope = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (a[n] > 0.0) {
        const double den = A * b[n] + mu * g[n];
        const double q = k * a[n] / (t * den);
        value += g[n] * q * q;
        slope += -2.0 * g[n] * q * q * (tp / t + g[n] / den);
      }
    }
    return std::pair{value, slope};
  };
  const auto root = detail::decreasing_root(
      eval, 0.0, 1.0, 1e-13, 200, "AO amplitude step multiplier search stalled");
  return amplitudes_at(root.x);
}

AoState ao_solve(const AmplitudeProblem& prob, int max_iters, double tol) {
  validate(prob);
  AoState st;
  st.p = standard_start(prob);

  double f = prob.h_d + kernels::dot(prob.alpha, st.p);
  double t = 1.0 + kernels::weighted_sumsq(prob.beta, st.p);
  if (f == 0.0) {
    // No direct link and no coupling: the objective is identically zero.
    st.p.assign(prob.size(), 0.0);
    st.objective_trace.push_back(0.0);
    st.converged = true;
    return st;
  }
  double obj = f * f / t;
  st.objective_trace.push_back(obj);

  for (int it = 0; it < max_iters; ++it) {
    st.rho = f * f / t;  // joint (rho, w) maximizer given p
    st.w = ao_w_update(f, t, st.rho);
    st.p = ao_amplitude_step(prob, st.rho, st.w);
    f = prob.h_d + kernels::dot(prob.alpha, st.p);
    t = 1.0 + kernels::weighted_sumsq(prob.beta, st.p);
    const double next = f * f / t;
    st.objective_trace.push_back(next);
    st.iterations = it + 1;
    if (std::abs(next - obj) <= tol * std::max(1.0, next)) {
      obj = next;
      st.converged = true;
      break;
    }
    obj = next;
  }
  return st;
}

DinkelbachState dinkelbach_solve(const AmplitudeProblem& prob, double tol) {
  validate(prob);
  const auto& a = prob.alpha;
  const auto& b = prob.beta;
  const auto& g = prob.gamma;
  if (prob.h_d == 0.0 && kernels::sum(a) == 0.0)
    throw NoSignalError("Dinkelbach requires a direct link or some alpha_n > 0");

  DinkelbachState st;
  st.p = standard_start(prob);
  auto ratio = [&](const std::vector<double>& p) {
    return (prob.h_d + kernels::dot(a, p)) /
           std::sqrt(1.0 + kernels::weighted_sumsq(b, p));
  };
  st.lambda = ratio(st.p);
  st.lambda_trace.push_back(st.lambda);

  auto project = [&](std::vector<double> p) {
    return detail::project_ellipsoid(std::move(p), g);
  };
  constexpr int kMaxOuter = 100;
  for (int outer = 0; outer < kMaxOuter; ++outer) {
    const double lambda = st.lambda;
    auto eval = [&](const std::vector<double>& p) {
      const double root = std::sqrt(1.0 + kernels::weighted_sumsq(b, p));
      const double value = prob.h_d + kernels::dot(a, p) - lambda * root;
      std::vector<double> grad(p.size());
      for (std::size_t n = 0; n < p.size(); ++n)
        grad[n] = a[n] - lambda * b[n] * p[n] / root;
      return std::pair{value, grad};
    };
    auto inner = detail::projected_ascent(eval, std::move(st.p), project);
    st.p = std::move(inner.p);
    st.gap = inner.value;
    const double next = ratio(st.p);
    st.lambda_trace.push_back(next);
    st.iterations = outer + 1;
    if (std::abs(next - st.lambda) <= tol * std::max(1.0, std::abs(next))) {
      st.lambda = next;
      st.converged = true;
      break;
    }
    st.lambda = next;
  }
  return st;
}

}  // namespace risopt
