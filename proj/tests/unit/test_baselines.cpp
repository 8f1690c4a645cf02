#include <doctest.h>

#include <cmath>
#include <vector>

#include "risopt/baselines.hpp"
#include "risopt/errors.hpp"
#include "risopt/model.hpp"
#include "risopt/random.hpp"
#include "risopt/solver.hpp"

using namespace risopt;

namespace {

AmplitudeProblem make_problem(double h_d, std::vector<double> a,
                              std::vector<double> b, std::vector<double> g,
                              double snr1 = 1.0) {
  AmplitudeProblem prob;
  prob.h_d = h_d;
  prob.alpha = std::move(a);
  prob.beta = std::move(b);
  prob.gamma = std::move(g);
  prob.snr1 = snr1;
  return prob;
}

AmplitudeProblem random_problem(SplitMix64& rng, std::size_t n, double h_d) {
  NormalizedScenario ns;
  const auto ch = generate_rayleigh(rng.next(), 0, n);
  ns.h1 = ch.h1;
  ns.h2 = ch.h2;
  ns.h_d = Complex(h_d, 0.0);
  ns.snr1 = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
  ns.snr2 = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
  return reduce(ns);
}

NormalizedScenario make_norm(std::vector<Complex> h1, std::vector<Complex> h2,
                             double snr1, double snr2) {
  NormalizedScenario ns;
  ns.h1 = std::move(h1);
  ns.h2 = std::move(h2);
  ns.snr1 = snr1;
  ns.snr2 = snr2;
  return ns;
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("relay closed form") {
  CHECK(relay_optimum_snr(make_norm({{1, 0}}, {{1, 0}}, 1.0, 1.0)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(relay_optimum_snr(make_norm({{0, 0}}, {{1, 0}}, 1.0, 1.0)) == 0.0);
  CHECK(relay_optimum_snr(make_norm({{1, 0}, {1, 0}}, {{1, 0}, {1, 1}}, 1.0,
                                    2.0)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("equal amplitude baseline") {
  CHECK(equal_amplitude(make_problem(0.0, {1}, {1}, {1})).p ==
        doctest::Approx(1.0).epsilon(1e-14));

  const auto sym = equal_amplitude(make_problem(0.0, {1, 1}, {1, 1}, {1, 1}));
  CHECK(sym.p == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sym.snr == doctest::Approx(1.0).epsilon(1e-14));

  const auto skew = equal_amplitude(make_problem(0.0, {1, 2}, {1, 1}, {2, 3}));
  CHECK(skew.p == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(skew.snr == doctest::Approx(9.0 / 7.0).epsilon(1e-14));
  CHECK(skew.snr < 4.0 / 3.0);  // strictly below the optimal configuration
}

TEST_CASE("ao block updates match their closed forms") {
  CHECK(ao_rho_update(1.5) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(ao_w_update(1.0, 1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-14));
  const auto p =
      ao_amplitude_step(make_problem(1.0, {1}, {1}, {1}), 3.0, 1.0);
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("ao amplitude step activates the constraint when needed") {
  // Weak noise coupling puts the surrogate peak far outside the ellipsoid
  // (unconstrained p is about 1.47 per element against a unit budget), so
  // the step must come back on the boundary.
  const auto prob = make_problem(0.1, {1, 1}, {0.01, 0.01}, {1, 2});
  const auto p = ao_amplitude_step(prob, 5.0, 0.8);
  CHECK(std::abs(power_margin(prob, p)) <= 1e-10);
}

TEST_CASE("ao matches the direct solver and keeps a monotone trace") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const double h_d = (trial % 4) * 0.4;
    const auto prob = random_problem(rng, 1 + trial % 6, h_d);
    const auto opt = solve(prob);
    const auto st = ao_solve(prob);
    CHECK(st.converged);
    for (std::size_t k = 1; k < st.objective_trace.size(); ++k)
      CHECK(st.objective_trace[k] >=
            st.objective_trace[k - 1] * (1.0 - 1e-12) - 1e-15);
    const double final = st.objective_trace.back();
    CHECK(final <= opt.objective + 1e-9 * std::max(1.0, opt.objective));
    CHECK(final >= opt.objective * (1.0 - 1e-4));
    CHECK(power_margin(prob, st.p) >= -1e-9);
  }
}

TEST_CASE("ao handles a hopeless problem gracefully") {
  const auto st = ao_solve(make_problem(0.0, {0, 0}, {0, 0}, {1, 1}));
  CHECK(st.converged);
  CHECK(st.objective_trace.back() == 0.0);
}

TEST_CASE("dinkelbach examples") {
  const auto nd = dinkelbach_solve(make_problem(0.0, {1}, {1}, {1}));
  CHECK(nd.converged);
  CHECK(nd.lambda == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
  CHECK(nd.p[0] == doctest::Approx(1.0).epsilon(1e-6));

  const auto direct_only = dinkelbach_solve(make_problem(1.0, {0}, {1}, {1}));
  CHECK(direct_only.lambda == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(direct_only.p[0] == doctest::Approx(0.0).epsilon(1e-6));

  CHECK_THROWS_AS(dinkelbach_solve(make_problem(0.0, {0}, {0}, {1})),
                  NoSignalError);
}

TEST_CASE("dinkelbach is a fixed point at the optimum and traces rise") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const double h_d = (trial % 4 == 0) ? 0.0 : 0.5 * (trial % 4);
    const auto prob = random_problem(rng, 1 + trial % 5, h_d);
    const auto opt = solve(prob);
    const auto st = dinkelbach_solve(prob);
    CHECK(st.converged);
    CHECK(st.lambda * st.lambda ==
          doctest::Approx(opt.objective).epsilon(1e-7));
    CHECK(std::abs(st.gap) <= 1e-6 * std::max(1.0, st.lambda));
    for (std::size_t k = 1; k < st.lambda_trace.size(); ++k)
      CHECK(st.lambda_trace[k] >=
            st.lambda_trace[k - 1] - 1e-12 * std::max(1.0, st.lambda_trace[k]));
  }
}

TEST_CASE("architecture ordering on no-direct instances") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto ch = generate_rayleigh(rng.next(), 0, n);
    NormalizedScenario ns;
    ns.h1 = ch.h1;
    ns.h2 = ch.h2;
    ns.snr1 = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
    ns.snr2 = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
    const auto prob = reduce(ns);
    const double eq = equal_amplitude(prob).snr;
    const double opt = solve(prob).receive_snr;
    const double relay = relay_optimum_snr(ns);
    CHECK(eq <= opt * (1.0 + 1e-12) + 1e-15);
    CHECK(opt <= relay * (1.0 + 1e-12) + 1e-15);
  }
}

}  // TEST_SUITE
