#include "risopt/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "risopt/baselines.hpp"
#include "risopt/errors.hpp"
#include "risopt/model.hpp"
#include "risopt/random.hpp"
#include "risopt/solver.hpp"

namespace risopt {

namespace {

using nlohmann::json;

constexpr Algorithm kAllAlgorithms[] = {Algorithm::Optimal, Algorithm::Equal,
                                        Algorithm::Relay, Algorithm::Ao,
                                        Algorithm::Dinkelbach};

double db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double value_db) { return std::pow(10.0, value_db / 10.0); }

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::vector<double> parse_db_axis(const json& v, const char* field) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_object()) {
    for (const char* key : {"start", "stop", "step"})
      if (!v.contains(key) || !v.at(key).is_number())
        throw InvalidInputError(std::string(field) +
                                " range needs numeric start/stop/step");
    const double start = v.at("start").get<double>();
    const double stop = v.at("stop").get<double>();
    const double step = v.at("step").get<double>();
    if (!(step > 0.0) || stop < start)
      throw InvalidInputError(std::string(field) +
                              " range needs step > 0 and stop >= start");
    std::vector<double> points;
    for (int i = 0;; ++i) {
      const double x = start + step * i;
      if (x > stop + 1e-9 * std::max(1.0, std::abs(stop))) break;
      points.push_back(x);
    }
    return points;
  }
  throw InvalidInputError(std::string(field) +
                          " must be a number or a start/stop/step object");
}

// Shortest stable decimal form; deterministic for a given libc.
std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double evaluate(Algorithm algo, const AmplitudeProblem& prob,
                const NormalizedScenario& norm) {
  switch (algo) {
    case Algorithm::Optimal:
      return solve(prob).receive_snr;
    case Algorithm::Equal:
      return equal_amplitude(prob).snr;
    case Algorithm::Relay:
      return relay_optimum_snr(norm);
    case Algorithm::Ao:
      return ao_solve(prob).objective_trace.back() * prob.snr1;
    case Algorithm::Dinkelbach: {
      const double lambda = dinkelbach_solve(prob).lambda;
      return lambda * lambda * prob.snr1;
    }
  }
  throw InvalidInputError("unknown algorithm");
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Optimal: return "optimal";
    case Algorithm::Equal: return "equal";
    case Algorithm::Relay: return "relay";
    case Algorithm::Ao: return "ao";
    case Algorithm::Dinkelbach: return "dinkelbach";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  for (Algorithm a : kAllAlgorithms)
    if (name == to_string(a)) return a;
  return std::nullopt;
}

BenchmarkConfig parse_benchmark_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("config JSON parse error: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InvalidInputError("config must be an object");
    BenchmarkConfig cfg;
    for (const char* key : {"n_elements", "snr1_db", "snr2_db", "realizations",
                            "seed"})
      if (!doc.contains(key))
        throw InvalidInputError(std::string("config is missing ") + key);
    cfg.n_elements = doc.at("n_elements").get<std::size_t>();
    cfg.snr1_db = parse_db_axis(doc.at("snr1_db"), "snr1_db");
    cfg.snr2_db = parse_db_axis(doc.at("snr2_db"), "snr2_db");
    cfg.h_d = doc.value("h_d", 0.0);
    cfg.realizations = doc.at("realizations").get<std::size_t>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    if (cfg.n_elements == 0) throw InvalidInputError("n_elements must be >= 1");
    if (cfg.realizations == 0)
      throw InvalidInputError("realizations must be >= 1");
    if (!(cfg.h_d >= 0.0) || !std::isfinite(cfg.h_d))
      throw InvalidInputError("h_d must be a finite nonnegative number");

    if (doc.contains("algorithms")) {
      if (!doc.at("algorithms").is_array())
        throw InvalidInputError("algorithms must be an array of names");
      for (const auto& name : doc.at("algorithms")) {
        const auto algo = algorithm_from_name(name.get<std::string>());
        if (!algo)
          throw InvalidInputError("unknown algorithm: " +
                                  name.get<std::string>());
        cfg.algorithms.push_back(*algo);
      }
    } else {
      cfg.algorithms.assign(std::begin(kAllAlgorithms),
                            std::end(kAllAlgorithms));
    }

    cfg.output = doc.value("output", std::string());
    const std::string domain = doc.value("avg_domain", std::string("linear"));
    if (domain == "linear") {
      cfg.avg_domain = AvgDomain::Linear;
    } else if (domain == "db") {
      cfg.avg_domain = AvgDomain::Db;
    } else {
      throw InvalidInputError("avg_domain must be \"linear\" or \"db\"");
    }
    return cfg;
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("config JSON structure error: ") +
                            e.what());
  }
}

BenchmarkConfig load_benchmark_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_benchmark_config(buf.str());
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config) {
  if (config.n_elements == 0 || config.realizations == 0 ||
      config.snr1_db.empty() || config.snr2_db.empty())
    throw InvalidInputError("benchmark config is incomplete");

  std::vector<BenchmarkRow> rows;
  for (double s1_db : config.snr1_db) {
    for (double s2_db : config.snr2_db) {
      const double snr1 = from_db(s1_db);
      const double snr2 = from_db(s2_db);
      std::vector<KahanSum> acc(config.algorithms.size());
      std::vector<std::size_t> ok(config.algorithms.size(), 0);

      for (std::size_t r = 0; r < config.realizations; ++r) {
        ChannelPair ch = generate_rayleigh(config.seed, r, config.n_elements);
        NormalizedScenario norm;
        norm.h_d = Complex(config.h_d, 0.0);
        norm.h1 = std::move(ch.h1);
        norm.h2 = std::move(ch.h2);
        norm.snr1 = snr1;
        norm.snr2 = snr2;
        const AmplitudeProblem prob = reduce(norm);

        for (std::size_t k = 0; k < config.algorithms.size(); ++k) {
          try {
            const double snr = evaluate(config.algorithms[k], prob, norm);
            acc[k].add(config.avg_domain == AvgDomain::Linear ? snr : db(snr));
            ++ok[k];
          } catch (const std::exception&) {
            // excluded from the mean; the row's count reports the loss
          }
        }
      }

      for (std::size_t k = 0; k < config.algorithms.size(); ++k) {
        BenchmarkRow row;
        row.architecture = to_string(config.algorithms[k]);
        row.n_elements = config.n_elements;
        row.snr1_db = s1_db;
        row.snr2_db = s2_db;
        row.h_d = config.h_d;
        row.realizations = ok[k];
        if (ok[k] == 0) {
          row.mean_receive_snr_db = std::nan("");
        } else {
          const double mean = acc[k].sum / static_cast<double>(ok[k]);
          row.mean_receive_snr_db =
              config.avg_domain == AvgDomain::Linear ? db(mean) : mean;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<BenchmarkRow> sweep_snr(const BenchmarkConfig& config) {
  if (config.snr1_db.size() < 2)
    throw InvalidInputError("sweep needs a snr1_db range with >= 2 points");
  return run_benchmark(config);
}

void write_csv(const std::vector<BenchmarkRow>& rows, std::ostream& out) {
  out << "architecture,n_elements,snr1_db,snr2_db,h_d,realizations,"
         "mean_receive_snr_db\n";
  for (const auto& row : rows) {
    out << row.architecture << ',' << row.n_elements << ','
        << format_number(row.snr1_db) << ',' << format_number(row.snr2_db)
        << ',' << format_number(row.h_d) << ',' << row.realizations << ','
        << format_number(row.mean_receive_snr_db) << '\n';
  }
}

void write_csv_file(const std::vector<BenchmarkRow>& rows,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw InvalidInputError("cannot open output file: " + path);
  write_csv(rows, out);
}

std::vector<RaySample> emit_ray_profile(double h_d, double alpha1, double beta1,
                                        double p_max, int steps) {
  if (steps < 2) throw InvalidInputError("ray profile needs steps >= 2");
  if (!(p_max > 0.0)) throw InvalidInputError("p_max must be positive");
  std::vector<RaySample> samples;
  samples.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    RaySample s;
    s.p = p_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    s.value = objective_on_ray(h_d, alpha1, beta1, s.p);
    samples.push_back(s);
  }
  return samples;
}

void write_ray_csv(const std::vector<RaySample>& samples, std::ostream& out) {
  out << "p,objective\n";
  for (const auto& s : samples)
    out << format_number(s.p) << ',' << format_number(s.value) << '\n';
}

}  // namespace risopt
