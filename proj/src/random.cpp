#include "risopt/random.hpp"

#include <cmath>

namespace risopt {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t counter) {
  return SplitMix64(mix64(seed ^ (counter * kGolden + 0xD1B54A32D192ED03ull)));
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix64(state_);
}

double SplitMix64::uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * 3.14159265358979323846 * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

ChannelPair generate_rayleigh(std::uint64_t seed,
                              std::uint64_t realization_index, std::size_t n) {
  SplitMix64 rng = SplitMix64::stream(seed, realization_index);
  const double scale = std::sqrt(0.5);
  ChannelPair ch;
  ch.h1.reserve(n);
  ch.h2.reserve(n);
  // Draw through named locals: argument evaluation order is unspecified,
  // and the real part must consume the earlier normal on every compiler.
  for (std::size_t i = 0; i < n; ++i) {
    const double re = scale * rng.normal();
    const double im = scale * rng.normal();
    ch.h1.emplace_back(re, im);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double re = scale * rng.normal();
    const double im = scale * rng.normal();
    ch.h2.emplace_back(re, im);
  }
  return ch;
}

}  // namespace risopt
