#pragma once

// JSON loading for scenarios. Complex values are written [re, im] (a bare
// number means a real value). Powers and noise variances can be given
// directly (P1/P2/sigma1_sq/sigma2_sq) or as snr1_db/snr2_db, which map to
// P1 = 10^(snr1_db/10), P2 = 10^(snr2_db/10) with unit noise; the two forms
// are mutually exclusive. Optional constraint fields: "subarrays" (0-based
// index groups) and "caps" (per-element amplitude bounds).

#include <optional>
#include <string>

#include "risopt/constrained.hpp"
#include "risopt/model.hpp"

namespace risopt {

struct ParsedScenario {
  Scenario scenario;
  std::optional<SubarrayPartition> subarrays;
  std::optional<CapVector> caps;
};

// Parses scenario JSON text. Malformed input throws InvalidInputError.
ParsedScenario parse_scenario(const std::string& text);

// Reads and parses a scenario file.
ParsedScenario load_scenario_file(const std::string& path);

}  // namespace risopt
