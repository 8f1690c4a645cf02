#include "risopt/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "risopt/errors.hpp"

namespace risopt {

namespace {

using nlohmann::json;

Complex parse_complex(const json& v, const char* field) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw InvalidInputError(std::string(field) +
                          " must be a number or an [re, im] pair");
}

std::vector<Complex> parse_channel(const json& v, const char* field) {
  if (!v.is_array() || v.empty())
    throw InvalidInputError(std::string(field) + " must be a nonempty array");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& entry : v) out.push_back(parse_complex(entry, field));
  return out;
}

double require_finite(double x, const char* field) {
  if (!std::isfinite(x))
    throw InvalidInputError(std::string(field) + " must be finite");
  return x;
}

ParsedScenario parse_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInputError("scenario must be an object");
  ParsedScenario out;
  Scenario& sc = out.scenario;

  if (doc.contains("h_d")) sc.h_d = parse_complex(doc.at("h_d"), "h_d");
  if (!doc.contains("h1") || !doc.contains("h2"))
    throw InvalidInputError("scenario needs h1 and h2 channel arrays");
  sc.h1 = parse_channel(doc.at("h1"), "h1");
  sc.h2 = parse_channel(doc.at("h2"), "h2");

  const bool power_form = doc.contains("P1") || doc.contains("P2") ||
                          doc.contains("sigma1_sq") || doc.contains("sigma2_sq");
  const bool snr_form = doc.contains("snr1_db") || doc.contains("snr2_db");
  if (power_form && snr_form)
    throw InvalidInputError(
        "give either P1/P2/sigma1_sq/sigma2_sq or snr1_db/snr2_db, not both");
  if (snr_form) {
    if (!doc.contains("snr1_db") || !doc.contains("snr2_db"))
      throw InvalidInputError("snr form needs both snr1_db and snr2_db");
    sc.P1 = std::pow(10.0, require_finite(doc.at("snr1_db").get<double>(),
                                          "snr1_db") / 10.0);
    sc.P2 = std::pow(10.0, require_finite(doc.at("snr2_db").get<double>(),
                                          "snr2_db") / 10.0);
    sc.sigma1_sq = 1.0;
    sc.sigma2_sq = 1.0;
  } else {
    sc.P1 = require_finite(doc.value("P1", 1.0), "P1");
    sc.P2 = require_finite(doc.value("P2", 1.0), "P2");
    sc.sigma1_sq = require_finite(doc.value("sigma1_sq", 1.0), "sigma1_sq");
    sc.sigma2_sq = require_finite(doc.value("sigma2_sq", 1.0), "sigma2_sq");
  }

  if (doc.contains("subarrays")) {
    const auto& groups = doc.at("subarrays");
    if (!groups.is_array())
      throw InvalidInputError("subarrays must be an array of index arrays");
    SubarrayPartition part;
    for (const auto& g : groups) {
      if (!g.is_array())
        throw InvalidInputError("each subarray must be an index array");
      std::vector<std::size_t> idx;
      for (const auto& i : g) {
        if (!i.is_number_unsigned())
          throw InvalidInputError("subarray indices must be nonnegative integers");
        idx.push_back(i.get<std::size_t>());
      }
      part.groups.push_back(std::move(idx));
    }
    validate_partition(part, sc.size());
    out.subarrays = std::move(part);
  }

  if (doc.contains("caps")) {
    const auto& caps = doc.at("caps");
    if (!caps.is_array() || caps.size() != sc.size())
      throw InvalidInputError("caps must list one bound per element");
    CapVector cv;
    for (const auto& c : caps) {
      if (!c.is_number())
        throw InvalidInputError("caps entries must be numbers");
      const double bound = require_finite(c.get<double>(), "caps");
      if (!(bound > 0.0))
        throw InvalidInputError("caps entries must be positive");
      cv.caps.push_back(bound);
    }
    out.caps = std::move(cv);
  }
  return out;
}

}  // namespace

ParsedScenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("scenario JSON parse error: ") +
                            e.what());
  }
  try {
    return parse_json(doc);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("scenario JSON structure error: ") +
                            e.what());
  }
}

ParsedScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace risopt
