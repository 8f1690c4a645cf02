#include "risopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ascent.hpp"
#include "risopt/errors.hpp"
#include "risopt/kernels.hpp"
#include "risopt/random.hpp"

namespace risopt {

namespace {

constexpr int kStarts = 64;

double objective(const AmplitudeProblem& prob, const std::vector<double>& p) {
  const double f = prob.h_d + kernels::dot(prob.alpha, p);
  return f * f / (1.0 + kernels::weighted_sumsq(prob.beta, p));
}

std::vector<double> axis_bounds(const AmplitudeProblem& prob,
                                const OracleConstraint& constraint) {
  if (constraint.kind == OracleConstraint::Kind::Box) {
    if (constraint.caps.size() != prob.size())
      throw InvalidInputError("box constraint needs one cap per element");
    for (double c : constraint.caps)
      if (!(c > 0.0) || !std::isfinite(c))
        throw InvalidInputError("box caps must be positive and finite");
    return constraint.caps;
  }
  const double g_min = *std::min_element(prob.gamma.begin(), prob.gamma.end());
  return std::vector<double>(prob.size(), 1.0 / std::sqrt(g_min));
}

bool feasible(const AmplitudeProblem& prob, const OracleConstraint& constraint,
              const std::vector<double>& p) {
  if (constraint.kind == OracleConstraint::Kind::Box) return true;
  return kernels::weighted_sumsq(prob.gamma, p) <= 1.0;
}

OracleResult golden_section_1d(const AmplitudeProblem& prob, double bound,
                               double resolution) {
  // The 1-D objective rises to a single peak and falls (or is monotone),
  // so a golden-section search over [0, bound] finds the maximum.
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = bound;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(prob, {x1});
  double f2 = objective(prob, {x2});
  while (hi - lo > resolution * bound) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(prob, {x2});
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(prob, {x1});
    }
  }
  OracleResult out;
  out.best_p = {0.5 * (lo + hi)};
  out.best_objective = objective(prob, out.best_p);
  out.resolution = resolution;
  out.method = OracleMethod::Bisection1D;
  return out;
}

OracleResult grid_search(const AmplitudeProblem& prob,
                         const OracleConstraint& constraint,
                         const std::vector<double>& bounds, double resolution) {
  const auto points = static_cast<std::size_t>(std::llround(1.0 / resolution)) + 1;
  OracleResult out;
  out.resolution = resolution;
  out.method = OracleMethod::Grid;
  out.best_p.assign(prob.size(), 0.0);
  out.best_objective = objective(prob, out.best_p);

  std::vector<double> p(prob.size(), 0.0);
  if (prob.size() == 1) {
    for (std::size_t i = 0; i < points; ++i) {
      p[0] = bounds[0] * static_cast<double>(i) / static_cast<double>(points - 1);
      if (!feasible(prob, constraint, p)) continue;
      const double val = objective(prob, p);
      if (val > out.best_objective) {
        out.best_objective = val;
        out.best_p = p;
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < points; ++i) {
    p[0] = bounds[0] * static_cast<double>(i) / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j) {
      p[1] = bounds[1] * static_cast<double>(j) / static_cast<double>(points - 1);
      if (!feasible(prob, constraint, p)) continue;
      const double val = objective(prob, p);
      if (val > out.best_objective) {
        out.best_objective = val;
        out.best_p = p;
      }
    }
  }
  return out;
}

OracleResult multistart_ascent(const AmplitudeProblem& prob,
                               const OracleConstraint& constraint,
                               const std::vector<double>& bounds,
                               std::uint64_t seed) {
  const auto& a = prob.alpha;
  const auto& b = prob.beta;
  auto eval = [&](const std::vector<double>& p) {
    const double f = prob.h_d + kernels::dot(a, p);
    const double t = 1.0 + kernels::weighted_sumsq(b, p);
    const double value = f * f / t;
    std::vector<double> grad(p.size());
    for (std::size_t n = 0; n < p.size(); ++n)
      grad[n] = (2.0 * f * a[n] - value * 2.0 * b[n] * p[n]) / t;
    return std::pair{value, grad};
  };
  std::function<std::vector<double>(std::vector<double>)> project;
  if (constraint.kind == OracleConstraint::Kind::Box) {
    project = [&](std::vector<double> p) {
      return detail::clamp_box(std::move(p), constraint.caps);
    };
  } else {
    project = [&](std::vector<double> p) {
      return detail::project_ellipsoid(std::move(p), prob.gamma);
    };
  }

  OracleResult out;
  out.resolution = kStarts;
  out.method = OracleMethod::MultiStartProjectedAscent;
  out.best_p.assign(prob.size(), 0.0);
  out.best_objective = objective(prob, out.best_p);
  for (int s = 0; s < kStarts; ++s) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(s));
    std::vector<double> start(prob.size());
    for (std::size_t n = 0; n < prob.size(); ++n)
      start[n] = bounds[n] * rng.uniform();
    const auto res = detail::projected_ascent(eval, std::move(start), project);
    if (res.value > out.best_objective) {
      out.best_objective = res.value;
      out.best_p = res.p;
    }
  }
  return out;
}

constexpr double kOrderingSlack = 1e-12;

bool close(double x, double y) {
  return std::abs(x - y) <= kOrderingSlack * std::max({1.0, x, y});
}

}  // namespace

const char* to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::Grid: return "Grid";
    case OracleMethod::MultiStartProjectedAscent:
      return "MultiStartProjectedAscent";
    case OracleMethod::Bisection1D: return "Bisection1D";
  }
  return "unknown";
}

OracleResult brute_force_optimum(const AmplitudeProblem& prob,
                                 const OracleConstraint& constraint,
                                 double resolution, std::uint64_t seed) {
  validate(prob);
  if (prob.size() > 4)
    throw InvalidInputError("brute-force oracle is limited to N <= 4");
  if (!(resolution > 0.0))
    throw InvalidInputError("oracle resolution must be positive");
  const std::vector<double> bounds = axis_bounds(prob, constraint);

  if (prob.size() == 1 && resolution < 1e-5)
    return golden_section_1d(prob, bounds[0], resolution);
  if (prob.size() <= 2) return grid_search(prob, constraint, bounds, resolution);
  return multistart_ascent(prob, constraint, bounds, seed);
}

SuperadditivityVerdict superadditivity_check(double x1, double y1, double x2,
                                             double y2) {
  if (x1 < 0.0 || y1 < 0.0 || x2 < 0.0 || y2 < 0.0)
    throw InvalidInputError("superadditivity check needs nonnegative inputs");
  auto g = [](double x, double y) { return x * y / (1.0 + x + y); };
  SuperadditivityVerdict v;
  v.lhs = g(x1, y1) + g(x2, y2);
  v.rhs = g(x1 + x2, y1 + y2);
  v.holds = v.lhs <= v.rhs + 1e-12 * std::max(1.0, v.rhs);
  // In every analytic equality case both sides evaluate through identical
  // floating-point expressions, so exact comparison is reliable here.
  v.equality_observed = v.lhs == v.rhs;
  v.equality_predicted = x1 * y2 == 0.0 && x2 * y1 == 0.0;
  return v;
}

SnrOrderingVerdict snr_ordering_check(const NormalizedScenario& norm) {
  if (std::abs(norm.h_d) != 0.0)
    throw InvalidInputError("ordering check applies to h_d = 0 scenarios");
  if (norm.h1.size() != norm.h2.size() || norm.h1.empty())
    throw InvalidInputError("channel vectors must be nonempty, equal length");
  const double s1 = norm.snr1, s2 = norm.snr2;
  const auto n = static_cast<double>(norm.size());

  double cross = 0.0, h1_sq = 0.0, h2_sq = 0.0, per_element = 0.0;
  for (std::size_t k = 0; k < norm.size(); ++k) {
    const double m1 = std::abs(norm.h1[k]);
    const double m2 = std::abs(norm.h2[k]);
    cross += m1 * m2;
    h1_sq += m1 * m1;
    h2_sq += m2 * m2;
    const double num = m1 * m1 * m2 * m2 * s1 * s2;
    if (num > 0.0) per_element += num / (m1 * m1 * s1 + m2 * m2 * s2 + 1.0);
  }

  SnrOrderingVerdict v;
  v.equal_amp = cross * cross * s1 * s2 / (h1_sq * s1 + h2_sq * s2 + n);
  v.optimal = per_element;
  v.relay = h1_sq * h2_sq * s1 * s2 / (h1_sq * s1 + h2_sq * s2 + 1.0);
  v.chain_holds =
      v.equal_amp <= v.optimal + kOrderingSlack * std::max(1.0, v.optimal) &&
      v.optimal <= v.relay + kOrderingSlack * std::max(1.0, v.relay);
  v.left_equality = close(v.equal_amp, v.optimal);
  v.right_equality = close(v.optimal, v.relay);
  return v;
}

}  // namespace risopt
