#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "risopt/errors.hpp"
#include "risopt/model.hpp"
#include "risopt/random.hpp"
#include "risopt/solver.hpp"

using namespace risopt;

namespace {

constexpr double kPi = 3.14159265358979323846;

Scenario two_element_scenario() {
  Scenario sc;
  sc.h_d = Complex(0.8, -0.6);
  sc.h1 = {Complex(0.9, 0.4), Complex(-0.3, 1.1)};
  sc.h2 = {Complex(1.2, -0.1), Complex(0.5, 0.7)};
  sc.P1 = 3.7;
  sc.P2 = 2.2;
  sc.sigma1_sq = 0.9;
  sc.sigma2_sq = 1.6;
  return sc;
}

// Receive SNR evaluated on raw physical quantities, no normalization:
// P1 |h_d + sum h2 phi h1|^2 / (sigma2^2 + sigma1^2 sum |h2 phi|^2)
// with phi_n = magnitude * e^{j phase}.
double physical_snr(const Scenario& sc, const std::vector<double>& magnitudes,
                    const std::vector<double>& phases) {
  Complex through = sc.h_d;
  double surface_noise = 0.0;
  for (std::size_t n = 0; n < sc.size(); ++n) {
    const Complex phi = std::polar(magnitudes[n], phases[n]);
    through += sc.h2[n] * phi * sc.h1[n];
    surface_noise += std::norm(sc.h2[n] * phi);
  }
  return sc.P1 * std::norm(through) /
         (sc.sigma2_sq + sc.sigma1_sq * surface_noise);
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("normalize folds powers into SNRs and rescales the direct link") {
  Scenario sc;
  sc.h_d = Complex(1.0, 0.0);
  sc.h1 = {Complex(1.0, 0.0)};
  sc.h2 = {Complex(1.0, 0.0)};
  sc.P1 = 10.0;
  sc.P2 = 5.0;
  const auto norm = normalize(sc);
  CHECK(norm.snr1 == doctest::Approx(10.0));
  CHECK(norm.snr2 == doctest::Approx(5.0));
  CHECK(norm.h_d.real() == doctest::Approx(1.0));

  sc.P1 = 0.0;
  CHECK(normalize(sc).snr1 == 0.0);  // degenerate but legal

  sc.P1 = 1.0;
  sc.h_d = Complex(2.0, 0.0);
  sc.sigma1_sq = 4.0;
  sc.sigma2_sq = 1.0;
  CHECK(normalize(sc).h_d.real() == doctest::Approx(4.0));
}

TEST_CASE("normalize rejects malformed scenarios") {
  Scenario sc = two_element_scenario();
  sc.h2.pop_back();
  CHECK_THROWS_AS(normalize(sc), InvalidInputError);

  sc = two_element_scenario();
  sc.h1.clear();
  sc.h2.clear();
  CHECK_THROWS_AS(normalize(sc), InvalidInputError);

  sc = two_element_scenario();
  sc.sigma1_sq = 0.0;
  CHECK_THROWS_AS(normalize(sc), InvalidInputError);

  sc = two_element_scenario();
  sc.P2 = -1.0;
  CHECK_THROWS_AS(normalize(sc), InvalidInputError);
}

TEST_CASE("optimal phases align every surface path with the direct link") {
  NormalizedScenario ns;
  ns.h_d = Complex(1.0, 0.0);
  ns.h1 = {std::polar(1.0, kPi / 4)};
  ns.h2 = {std::polar(1.0, kPi / 4)};
  ns.snr1 = ns.snr2 = 1.0;
  auto ph = optimal_phases(ns);
  CHECK(ph[0] == doctest::Approx(1.5 * kPi).epsilon(1e-12));

  ns.h1 = {Complex(2.0, 0.0)};
  ns.h2 = {Complex(0.3, 0.0)};
  ph = optimal_phases(ns);
  CHECK(ph[0] == doctest::Approx(0.0));

  ns.h_d = Complex(0.0, 0.0);  // direct-link phase defined as 0
  ns.h1 = {Complex(0.0, 1.0)};
  ns.h2 = {Complex(1.0, 0.0)};
  ph = optimal_phases(ns);
  CHECK(ph[0] == doctest::Approx(1.5 * kPi).epsilon(1e-12));

  for (double p : ph) {
    CHECK(p >= 0.0);
    CHECK(p < 2.0 * kPi);
  }
}

TEST_CASE("reduce produces the documented coefficients") {
  NormalizedScenario ns;
  ns.h_d = Complex(0.0, 0.0);
  ns.h1 = {Complex(1.0, 0.0)};
  ns.h2 = {Complex(2.0, 0.0)};
  ns.snr1 = 1.0;
  ns.snr2 = 2.0;
  auto prob = reduce(ns);
  CHECK(prob.alpha[0] == doctest::Approx(2.0));
  CHECK(prob.beta[0] == doctest::Approx(4.0));
  CHECK(prob.gamma[0] == doctest::Approx(1.0));

  ns.h2 = {Complex(0.0, 0.0)};
  prob = reduce(ns);
  CHECK(prob.alpha[0] == 0.0);
  CHECK(prob.beta[0] == 0.0);
  CHECK(prob.gamma[0] > 0.0);

  ns.snr1 = 0.0;
  prob = reduce(ns);
  CHECK(prob.gamma[0] == doctest::Approx(0.5));  // 1/snr2

  ns.snr2 = 0.0;
  CHECK_THROWS_AS(reduce(ns), DegenerateBudgetError);
}

TEST_CASE("receive snr, power margin and the ray restriction") {
  AmplitudeProblem prob;
  prob.h_d = 1.0;
  prob.alpha = {0.0};
  prob.beta = {0.0};
  prob.gamma = {1.0};
  prob.snr1 = 10.0;
  CHECK(receive_snr(prob, std::vector<double>{0.0}) == doctest::Approx(10.0));

  prob.h_d = 0.0;
  prob.alpha = {1.0};
  prob.beta = {1.0};
  prob.snr1 = 1.0;
  CHECK(receive_snr(prob, std::vector<double>{1.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(receive_snr(prob, std::vector<double>{1.0, 2.0}),
                  InvalidInputError);

  AmplitudeProblem two;
  two.h_d = 0.0;
  two.alpha = {1.0, 1.0};
  two.beta = {1.0, 1.0};
  two.gamma = {1.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(power_margin(two, std::vector<double>{r, r}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  two.gamma = {2.0, 3.0};
  CHECK(power_margin(two, std::vector<double>{2.0 / std::sqrt(35.0),
                                              3.0 / std::sqrt(35.0)}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(power_margin(two, std::vector<double>{0.0, 0.0}) == doctest::Approx(1.0));

  CHECK(objective_on_ray(1.0, 1.0, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(objective_on_ray(1.0, 1.0, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(objective_on_ray(1.0, 1.0, 1.0, 1e8) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("normalization consistency against the raw physical formula") {
  const Scenario sc = two_element_scenario();
  const auto norm = normalize(sc);
  const auto prob = reduce(norm);
  const auto phases = optimal_phases(norm);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u(sc.size());
    for (auto& x : u) x = 2.0 * rng.uniform();
    // Reduced amplitudes u correspond to physical surface gains
    // (sigma2/sigma1) * u.
    const double scale = std::sqrt(sc.sigma2_sq / sc.sigma1_sq);
    std::vector<double> mag(sc.size());
    for (std::size_t n = 0; n < u.size(); ++n) mag[n] = scale * u[n];
    const double raw = physical_snr(sc, mag, phases);
    const double reduced = receive_snr(prob, u);
    CHECK(reduced == doctest::Approx(raw).epsilon(1e-12));
  }
}

TEST_CASE("optimal phases beat random phases at fixed amplitudes") {
  const Scenario sc = two_element_scenario();
  const auto norm = normalize(sc);
  const auto best = optimal_phases(norm);
  SplitMix64 rng(11);
  const std::vector<double> mag{0.7, 0.4};
  const double aligned = physical_snr(sc, mag, best);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> ph(sc.size());
    for (auto& x : ph) x = 2.0 * kPi * rng.uniform();
    CHECK(physical_snr(sc, mag, ph) <= aligned * (1.0 + 1e-12));
  }
}

TEST_CASE("optimal receive snr is non-decreasing in snr1") {
  NormalizedScenario ns;
  ns.h_d = Complex(0.9, 0.2);
  ns.h1 = {Complex(0.8, 0.1), Complex(-0.2, 0.6), Complex(0.4, -0.7)};
  ns.h2 = {Complex(0.3, -0.9), Complex(1.1, 0.2), Complex(-0.5, 0.4)};
  ns.snr2 = 2.0;
  double last = 0.0;
  for (double snr1 = 1e-2; snr1 <= 1e4; snr1 *= 10.0) {
    ns.snr1 = snr1;
    const auto rep = solve(reduce(ns));
    CHECK(rep.receive_snr >= last * (1.0 - 1e-12));
    last = rep.receive_snr;
  }
}

TEST_CASE("reduced problems satisfy the structural zero pattern") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    NormalizedScenario ns;
    for (int n = 0; n < 4; ++n) {
      const bool dead = rng.uniform() < 0.3;
      ns.h1.emplace_back(rng.normal(), rng.normal());
      ns.h2.emplace_back(dead ? Complex(0.0, 0.0)
                              : Complex(rng.normal(), rng.normal()));
    }
    ns.snr1 = 1.0;
    ns.snr2 = 3.0;
    const auto prob = reduce(ns);
    for (std::size_t n = 0; n < prob.size(); ++n) {
      if (prob.beta[n] == 0.0) CHECK(prob.alpha[n] == 0.0);
      CHECK(prob.gamma[n] > 0.0);
    }
    CHECK_NOTHROW(validate(prob));
  }
}

}  // TEST_SUITE
