#pragma once

// Monte Carlo benchmark harness: Rayleigh ensembles, per-architecture mean
// receive SNR, and CSV emission. Deterministic for a fixed seed, so repeat
// runs produce byte-identical files.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace risopt {

enum class Algorithm { Optimal, Equal, Relay, Ao, Dinkelbach };
const char* to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

enum class AvgDomain { Linear, Db };

struct BenchmarkConfig {
  std::size_t n_elements = 1;
  std::vector<double> snr1_db;  // one or more sweep points
  std::vector<double> snr2_db;
  double h_d = 0.0;             // real direct-link magnitude
  std::size_t realizations = 1;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms;  // may be empty: header-only output
  std::string output;                 // optional default output path
  AvgDomain avg_domain = AvgDomain::Linear;
};

// Config JSON: snr1_db/snr2_db accept a number or {"start","stop","step"}
// (dB, inclusive stop); "algorithms" is an array of names and defaults to
// all five; "avg_domain" is "linear" (default) or "db".
BenchmarkConfig parse_benchmark_config(const std::string& text);
BenchmarkConfig load_benchmark_config_file(const std::string& path);

struct BenchmarkRow {
  std::string architecture;
  std::size_t n_elements = 0;
  double snr1_db = 0.0;
  double snr2_db = 0.0;
  double h_d = 0.0;
  std::size_t realizations = 0;  // successful realizations in this row
  double mean_receive_snr_db = 0.0;
};

// Runs every (snr1, snr2, algorithm) cell. Realization r always uses the
// channel draw generate_rayleigh(seed, r, N), shared across sweep points,
// so curves differ only through the SNRs. A realization where an algorithm
// throws is excluded from that algorithm's mean; the row's realization
// count reports how many survived.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config);

// run_benchmark specialized to drawing a curve; requires >= 2 snr1_db points.
std::vector<BenchmarkRow> sweep_snr(const BenchmarkConfig& config);

void write_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<BenchmarkRow>& rows,
                    const std::string& path);

struct RaySample {
  double p = 0.0;
  double value = 0.0;
};

// Uniform samples of the single-coordinate objective restriction on
// [0, p_max]; steps >= 2.
std::vector<RaySample> emit_ray_profile(double h_d, double alpha1, double beta1,
                                        double p_max, int steps);
void write_ray_csv(const std::vector<RaySample>& samples, std::ostream& out);

}  // namespace risopt
