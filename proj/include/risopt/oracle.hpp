#pragma once

// Independent verifiers: a brute-force optimizer for desk-scale instances
// and analytic inequality checks used to certify the solver's output and
// the architecture ordering.

#include <cstdint>
#include <vector>

#include "risopt/model.hpp"

namespace risopt {

enum class OracleMethod { Grid, MultiStartProjectedAscent, Bisection1D };
const char* to_string(OracleMethod m);

struct OracleConstraint {
  enum class Kind { Ellipsoid, Box };
  Kind kind = Kind::Ellipsoid;
  std::vector<double> caps;  // per-axis bounds, Box only

  static OracleConstraint ellipsoid() { return {}; }
  static OracleConstraint box(std::vector<double> caps) {
    return {Kind::Box, std::move(caps)};
  }
};

struct OracleResult {
  std::vector<double> best_p;
  double best_objective = 0.0;
  // Grid/Bisection1D: requested step relative to the axis bound.
  // MultiStartProjectedAscent: number of starts.
  double resolution = 0.0;
  OracleMethod method = OracleMethod::Grid;
};

// Exhaustive/randomized maximization of the reduced objective.
//   N <= 2: dense grid with the given relative step (golden-section line
//           search instead when N = 1 and resolution < 1e-5);
//   N in {3, 4}: 64 random feasible starts of projected gradient ascent;
//   N > 4: refused.
// Deterministic for a fixed seed.
OracleResult brute_force_optimum(const AmplitudeProblem& prob,
                                 const OracleConstraint& constraint,
                                 double resolution,
                                 std::uint64_t seed = 1234);

struct SuperadditivityVerdict {
  double lhs = 0.0;  // g(x1,y1) + g(x2,y2) with g(x,y) = xy/(1+x+y)
  double rhs = 0.0;  // g(x1+x2, y1+y2)
  bool holds = false;
  bool equality_observed = false;
  bool equality_predicted = false;  // x1*y2 == 0 and x2*y1 == 0
};

// Checks g(x1,y1) + g(x2,y2) <= g(x1+x2,y1+y2) for nonnegative inputs and
// reports whether the observed equality matches the analytic condition.
SuperadditivityVerdict superadditivity_check(double x1, double y1, double x2,
                                             double y2);

struct SnrOrderingVerdict {
  double equal_amp = 0.0;  // equal-amplitude surface, closed form
  double optimal = 0.0;    // optimal surface, closed form
  double relay = 0.0;      // relay bound
  bool chain_holds = false;       // equal_amp <= optimal <= relay (1e-12 slack)
  bool left_equality = false;     // equal_amp == optimal within slack
  bool right_equality = false;    // optimal == relay within slack
};

// Evaluates the three closed-form receive SNRs for a no-direct-link
// scenario and verifies their ordering. Requires h_d = 0.
SnrOrderingVerdict snr_ordering_check(const NormalizedScenario& norm);

}  // namespace risopt
