#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace risopt {

using Complex = std::complex<double>;

// Channel magnitudes below this are treated as exact zeros to keep
// denormal-range inputs from destabilizing ratios and phase extraction.
inline constexpr double kZeroMagnitude = 1e-300;

// Raw physical link description: direct channel, the two surface hops,
// transmit/surface powers and the two noise variances.
struct Scenario {
  Complex h_d{0.0, 0.0};
  std::vector<Complex> h1;  // transmitter -> surface
  std::vector<Complex> h2;  // surface -> receiver
  double P1 = 1.0;
  double P2 = 1.0;
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;

  std::size_t size() const { return h1.size(); }
};

// Scenario after folding powers and noise variances into two SNR constants
// and rescaling the direct link by sigma1/sigma2, so downstream math can
// treat both noise variances as 1.
struct NormalizedScenario {
  Complex h_d{0.0, 0.0};
  std::vector<Complex> h1;
  std::vector<Complex> h2;
  double snr1 = 0.0;
  double snr2 = 0.0;

  std::size_t size() const { return h1.size(); }
};

// Phase-aligned amplitude problem:
//
//   maximize (h_d + sum_n alpha_n p_n)^2 / (1 + sum_n beta_n p_n^2)
//   subject to sum_n gamma_n p_n^2 <= 1,  p >= 0,
//
// with receive SNR = objective * snr1.
struct AmplitudeProblem {
  double h_d = 0.0;            // direct-link magnitude after phase alignment
  std::vector<double> alpha;   // signal coupling |h1_n|*|h2_n|
  std::vector<double> beta;    // surface-noise coupling |h2_n|^2
  std::vector<double> gamma;   // budget weight (|h1_n|^2*snr1 + 1)/snr2
  double snr1 = 1.0;           // kept for SNR reporting

  std::size_t size() const { return alpha.size(); }
};

struct RisConfiguration {
  std::vector<double> amplitudes;  // nonnegative per-element gains
  std::vector<double> phases;      // radians, canonical [0, 2*pi)
};

// Throws InvalidInputError on a malformed scenario (mismatched channel
// lengths, empty channels, non-positive noise variances, negative powers).
NormalizedScenario normalize(const Scenario& s);

// Phases that rotate every surface path onto the direct link's phase. The
// argument of a zero (or sub-kZeroMagnitude) channel entry is taken as 0,
// and a zero direct link is treated as phase 0.
std::vector<double> optimal_phases(const NormalizedScenario& ns);

// Magnitude reduction to the amplitude problem. Throws DegenerateBudgetError
// when snr2 = 0 (budget weights undefined; the surface must stay silent).
AmplitudeProblem reduce(const NormalizedScenario& ns);

// (h_d + sum alpha p)^2 / (1 + sum beta p^2); amplitudes must be nonnegative.
double reduced_objective(const AmplitudeProblem& prob, std::span<const double> p);

// reduced_objective * snr1. Throws InvalidInputError on length mismatch.
double receive_snr(const AmplitudeProblem& prob, std::span<const double> p);

// 1 - sum gamma p^2; the configuration is feasible iff this is >= 0.
double power_margin(const AmplitudeProblem& prob, std::span<const double> p);

// Single-coordinate restriction (h_d + alpha1*p1)^2 / (1 + beta1*p1^2),
// used by the CLI to emit ray-profile samples.
double objective_on_ray(double h_d, double alpha1, double beta1, double p1);

// Throws InvalidInputError if the problem violates its invariants
// (length mismatches, negative entries, non-positive gamma, or beta_n = 0
// with alpha_n > 0).
void validate(const AmplitudeProblem& prob);

}  // namespace risopt
