#pragma once

// Comparison architectures and prior-art algorithms: the amplify-and-forward
// relay optimum, the equal-amplitude surface, alternating optimization, and
// Dinkelbach fractional programming. All of them target the same reduced
// problem as the direct solver and exist to quantify its advantage.

#include <vector>

#include "risopt/model.hpp"

namespace risopt {

// Best receive SNR of a full AF relay (unconstrained unitary combining),
// RIS-assisted term only:
//   ||h1||^2 ||h2||^2 snr1 snr2 / (||h1||^2 snr1 + ||h2||^2 snr2 + 1).
// The direct-link MRC term is reported separately by callers that need it.
double relay_optimum_snr(const NormalizedScenario& norm);

struct EqualAmplitudeResult {
  double p = 0.0;    // common amplitude 1/sqrt(sum gamma)
  double snr = 0.0;  // receive SNR with every element at p
};

// All elements share the largest power-feasible common amplitude.
EqualAmplitudeResult equal_amplitude(const AmplitudeProblem& prob);

struct AoState {
  std::vector<double> p;
  double rho = 0.0;
  double w = 0.0;
  std::vector<double> objective_trace;  // true objective per round, non-decreasing
  bool converged = false;
  int iterations = 0;
};

// One round of the auxiliary-variable updates, exposed for testing.
// rho maximizes the surrogate at fixed (p, w-consistent) state; xi is the
// transient product (h_d + sum alpha p) * w.
double ao_rho_update(double xi);
// w maximizes the surrogate at fixed rho and p, where f_hat = h_d + sum
// alpha p and t_hat = 1 + sum beta p^2.
double ao_w_update(double f_hat, double t_hat, double rho);
// Amplitude block update: exact maximizer of the quadratic surrogate over
// the power ellipsoid (diagonal-plus-rank-one trust-region step).
std::vector<double> ao_amplitude_step(const AmplitudeProblem& prob, double rho,
                                      double w);

// Alternating optimization from the standard start p_n = 1/sqrt(sum gamma).
// Stops when the relative objective change drops below tol.
AoState ao_solve(const AmplitudeProblem& prob, int max_iters = 500,
                 double tol = 1e-10);

struct DinkelbachState {
  std::vector<double> p;
  double lambda = 0.0;               // final ratio estimate; lambda^2 = objective
  double gap = 0.0;                  // transformed objective at the final iterate
  std::vector<double> lambda_trace;  // non-decreasing
  bool converged = false;
  int iterations = 0;                // outer iterations
};

// Fractional programming on the square-root form of the objective. The inner
// concave maximization runs projected gradient ascent with backtracking.
DinkelbachState dinkelbach_solve(const AmplitudeProblem& prob,
                                 double tol = 1e-10);

}  // namespace risopt
