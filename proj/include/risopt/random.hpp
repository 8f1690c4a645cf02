#pragma once

// Deterministic, portable random number generation for the Monte Carlo
// benchmarks. std::normal_distribution is implementation-defined, which
// would break byte-identical reproducibility across standard libraries,
// so sampling is pinned down explicitly: SplitMix64 for bits, Box-Muller
// for normals. Values are stable across platforms and documented in the
// README.

#include <cstdint>
#include <vector>

#include "risopt/model.hpp"

namespace risopt {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Independent stream for one (seed, counter) pair; realizations can be
  // generated in any order or in parallel.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t counter);

  std::uint64_t next();

  // Uniform on (0, 1]; never returns 0 so log() in Box-Muller is safe.
  double uniform();

  // Standard normal via Box-Muller; generates pairs, caches the spare.
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct ChannelPair {
  std::vector<Complex> h1;
  std::vector<Complex> h2;
};

// Rayleigh fading draw: every entry is sqrt(1/2) (g_re + i g_im) with
// independent standard normals, so E|entry|^2 = 1. Deterministic in
// (seed, realization_index).
ChannelPair generate_rayleigh(std::uint64_t seed,
                              std::uint64_t realization_index, std::size_t n);

}  // namespace risopt
