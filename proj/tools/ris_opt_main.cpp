// ris-opt: solve single scenarios, run Monte Carlo benchmarks and SNR
// sweeps, and dump the 1-D objective ray profile. Exit codes: 0 success,
// 2 invalid input, 3 convergence failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "risopt/baselines.hpp"
#include "risopt/bench.hpp"
#include "risopt/constrained.hpp"
#include "risopt/errors.hpp"
#include "risopt/model.hpp"
#include "risopt/oracle.hpp"
#include "risopt/scenario_io.hpp"
#include "risopt/solver.hpp"

namespace {

using nlohmann::json;
using namespace risopt;

struct SolveOptions {
  std::string scenario_path;
  std::string algo = "optimal";
  bool use_caps = false;
  bool use_subarrays = false;
};

json solve_report_json(const AmplitudeProblem& prob,
                       const NormalizedScenario& norm,
                       const std::vector<double>& amplitudes) {
  json j;
  j["amplitudes"] = amplitudes;
  j["phases"] = optimal_phases(norm);
  j["objective"] = reduced_objective(prob, amplitudes);
  j["receive_snr"] = receive_snr(prob, amplitudes);
  j["direct_snr"] = std::norm(norm.h_d) * norm.snr1;
  return j;
}

int run_solve(const SolveOptions& opt) {
  const ParsedScenario parsed = load_scenario_file(opt.scenario_path);
  const NormalizedScenario norm = normalize(parsed.scenario);
  const AmplitudeProblem prob = reduce(norm);

  if (opt.use_caps && opt.use_subarrays)
    throw InvalidInputError("--caps and --subarrays cannot be combined");
  if ((opt.use_caps || opt.use_subarrays) && opt.algo != "optimal")
    throw InvalidInputError("constraint modes support --algo optimal only");

  json out;
  out["algorithm"] = opt.algo;
  out["n_elements"] = prob.size();

  if (opt.use_caps) {
    if (!parsed.caps)
      throw InvalidInputError("--caps requires a \"caps\" field in the scenario");
    const CapsSolution sol = solve_per_element_caps(prob, *parsed.caps);
    out.update(solve_report_json(prob, norm, sol.amplitudes));
    out["constraint"] = "caps";
    out["rho"] = sol.rho;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (opt.use_subarrays) {
    if (!parsed.subarrays)
      throw InvalidInputError(
          "--subarrays requires a \"subarrays\" field in the scenario");
    const AmplitudeProblem agg = aggregate_subarrays(prob, *parsed.subarrays);
    const SolveReport rep = solve(agg);
    const std::vector<double> p =
        expand_subarrays(*parsed.subarrays, rep.amplitudes, prob.size());
    out.update(solve_report_json(prob, norm, p));
    out["constraint"] = "subarrays";
    out["regime"] = to_string(rep.regime);
    if (rep.eta) out["eta"] = *rep.eta;
    out["newton_iterations"] = rep.newton_iterations;
    out["residual"] = rep.residual;
    out["feasibility_margin"] = power_margin(prob, p);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (opt.algo == "optimal") {
    const SolveReport rep = solve(prob);
    out.update(solve_report_json(prob, norm, rep.amplitudes));
    out["constraint"] = "ellipsoid";
    out["regime"] = to_string(rep.regime);
    if (rep.eta) out["eta"] = *rep.eta;
    out["newton_iterations"] = rep.newton_iterations;
    out["residual"] = rep.residual;
    out["feasibility_margin"] = power_margin(prob, rep.amplitudes);
  } else if (opt.algo == "ao") {
    const AoState st = ao_solve(prob);
    out.update(solve_report_json(prob, norm, st.p));
    out["constraint"] = "ellipsoid";
    out["iterations"] = st.iterations;
    out["converged"] = st.converged;
    out["feasibility_margin"] = power_margin(prob, st.p);
  } else if (opt.algo == "dinkelbach") {
    const DinkelbachState st = dinkelbach_solve(prob);
    out.update(solve_report_json(prob, norm, st.p));
    out["constraint"] = "ellipsoid";
    out["lambda"] = st.lambda;
    out["gap"] = st.gap;
    out["iterations"] = st.iterations;
    out["converged"] = st.converged;
    out["feasibility_margin"] = power_margin(prob, st.p);
  } else {
    throw InvalidInputError("unknown --algo value: " + opt.algo);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_table(const std::string& config_path, const std::string& out_path,
              const std::string& avg_domain, bool sweep) {
  BenchmarkConfig cfg = load_benchmark_config_file(config_path);
  if (!avg_domain.empty()) {
    if (avg_domain == "linear") {
      cfg.avg_domain = AvgDomain::Linear;
    } else if (avg_domain == "db") {
      cfg.avg_domain = AvgDomain::Db;
    } else {
      throw InvalidInputError("--avg-domain must be linear or db");
    }
  }
  const auto rows = sweep ? sweep_snr(cfg) : run_benchmark(cfg);
  const std::string path = out_path.empty() ? cfg.output : out_path;
  if (path.empty()) {
    write_csv(rows, std::cout);
  } else {
    write_csv_file(rows, path);
  }
  return 0;
}

int run_fig1(const std::string& out_path, double h_d, double alpha, double beta,
             double p_max, int steps) {
  const auto samples = emit_ray_profile(h_d, alpha, beta, p_max, steps);
  if (out_path.empty()) {
    write_ray_csv(samples, std::cout);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot open output file: " + out_path);
  write_ray_csv(samples, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal active RIS configuration for a SISO link"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd =
      app.add_subcommand("solve", "Solve one scenario, print a JSON report");
  solve_cmd->add_option("scenario", solve_opt.scenario_path, "scenario JSON file")
      ->required();
  solve_cmd->add_option("--algo", solve_opt.algo, "optimal | ao | dinkelbach")
      ->check(CLI::IsMember({"optimal", "ao", "dinkelbach"}));
  solve_cmd->add_flag("--caps", solve_opt.use_caps,
                      "use per-element caps from the scenario");
  solve_cmd->add_flag("--subarrays", solve_opt.use_subarrays,
                      "use the subarray partition from the scenario");

  std::string bench_config, bench_out, bench_domain;
  auto* bench_cmd =
      app.add_subcommand("bench", "Monte Carlo benchmark table to CSV");
  bench_cmd->add_option("--config", bench_config, "benchmark config JSON")
      ->required();
  bench_cmd->add_option("--out", bench_out, "output CSV path (default stdout)");
  bench_cmd->add_option("--avg-domain", bench_domain,
                        "average receive SNR in linear or db domain")
      ->check(CLI::IsMember({"linear", "db"}));

  std::string sweep_config, sweep_out, sweep_domain;
  auto* sweep_cmd = app.add_subcommand("sweep", "SNR sweep curve to CSV");
  sweep_cmd->add_option("--config", sweep_config, "sweep config JSON")
      ->required();
  sweep_cmd->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep_cmd->add_option("--avg-domain", sweep_domain,
                        "average receive SNR in linear or db domain")
      ->check(CLI::IsMember({"linear", "db"}));

  std::string fig_out;
  double fig_hd = 1.0, fig_alpha = 1.0, fig_beta = 1.0, fig_pmax = 5.0;
  int fig_steps = 501;
  auto* fig_cmd =
      app.add_subcommand("fig1", "Objective restriction along one coordinate");
  fig_cmd->add_option("--out", fig_out, "output CSV path (default stdout)");
  fig_cmd->add_option("--h-d", fig_hd, "direct link magnitude");
  fig_cmd->add_option("--alpha", fig_alpha, "signal coupling of the coordinate");
  fig_cmd->add_option("--beta", fig_beta, "noise coupling of the coordinate");
  fig_cmd->add_option("--p-max", fig_pmax, "amplitude range end");
  fig_cmd->add_option("--steps", fig_steps, "number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Fold usage errors into the invalid-input exit class; --help stays 0.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opt);
    if (bench_cmd->parsed())
      return run_table(bench_config, bench_out, bench_domain, false);
    if (sweep_cmd->parsed())
      return run_table(sweep_config, sweep_out, sweep_domain, true);
    if (fig_cmd->parsed())
      return run_fig1(fig_out, fig_hd, fig_alpha, fig_beta, fig_pmax, fig_steps);
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
