#pragma once

#include <optional>
#include <vector>

#include "risopt/model.hpp"

namespace risopt {

// Which closed-form/iterative branch produced the solution.
enum class Regime { NoDirectClosedForm, StationaryHighDirect, SecularNewton };

const char* to_string(Regime r);

struct SolveReport {
  Regime regime = Regime::NoDirectClosedForm;
  std::vector<double> amplitudes;
  std::optional<double> eta;     // budget multiplier, SecularNewton only
  double objective = 0.0;        // (h_d + sum alpha p)^2 / (1 + sum beta p^2)
  double receive_snr = 0.0;      // objective * snr1
  int newton_iterations = 0;
  double residual = 0.0;         // |secular residual| at the returned root
};

struct SecularRoot {
  double eta = 0.0;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> iterates;  // monotone non-decreasing Newton sequence
};

// Globally optimal amplitudes. Dispatch:
//   h_d > 0 and sum alpha^2 gamma / beta^2 <= h_d^2  -> StationaryHighDirect
//   h_d = 0 (or below 1e-14 * max alpha)             -> NoDirectClosedForm
//   otherwise                                        -> SecularNewton
// The all-zero problem (h_d = 0, alpha = 0) yields a zero-objective report
// with p = 0 rather than an error.
SolveReport solve(const AmplitudeProblem& prob, double tol = 1e-12);

// Closed form for h_d = 0; the power constraint comes out exactly active.
// Throws NoSignalError when every alpha_n is zero.
std::vector<double> solve_no_direct(const AmplitudeProblem& prob);

// Interior stationary point for a dominant direct link. Requires the
// dispatch condition sum alpha^2 gamma / beta^2 <= h_d^2 (throws
// std::logic_error otherwise: calling this directly bypasses dispatch).
std::vector<double> solve_stationary(const AmplitudeProblem& prob);

// Root of f(eta) = sum_n alpha_n^2 gamma_n / (beta_n + eta*(beta_n+gamma_n))^2 - h_d^2,
// which is convex and strictly decreasing for eta >= 0. Newton starts at the
// bracketing guess max(0, sqrt(sum alpha^2 gamma/(beta+gamma)^2)/h_d - 1) and
// increases monotonically. Tolerance is tol * max(1, h_d^2) on |f|; throws
// ConvergenceError past 100 iterations.
SecularRoot secular_root(const AmplitudeProblem& prob, double tol = 1e-12);

// Amplitudes for a given secular root: p_n = alpha_n / (h_d * (beta_n + eta*(beta_n+gamma_n))).
std::vector<double> solve_with_direct(const AmplitudeProblem& prob, double eta);

}  // namespace risopt
