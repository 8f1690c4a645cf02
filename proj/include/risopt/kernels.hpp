#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Dense reduction kernels used by the hot evaluation paths (per-realization
// objective/constraint sums and the secular-equation Newton loop).
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2
// variant is selected once at startup when the CPU supports it; the choice
// can be overridden with the environment variable RIS_OPT_KERNELS=scalar|avx2
// or programmatically via set_backend (tests use this for equivalence runs).
// Backends may differ in summation order, so results agree only up to
// floating-point reassociation error.

namespace risopt::kernels {

double sum(std::span<const double> x);

double dot(std::span<const double> x, std::span<const double> y);

// sum_n w[n] * p[n]^2
double weighted_sumsq(std::span<const double> w, std::span<const double> p);

// Secular-equation sums at shift eta:
//   pow2 = sum_n s[n] / (b[n] + eta*d[n])^2
//   pow3 = sum_n s[n]*d[n] / (b[n] + eta*d[n])^3
// The secular residual is pow2 - h_d^2 and its derivative is -2*pow3.
struct SecularSums {
  double pow2;
  double pow3;
};
SecularSums secular_sums(std::span<const double> s, std::span<const double> b,
                         std::span<const double> d, double eta);

std::string_view active_backend();
// Returns false (and leaves the dispatch unchanged) if the named backend is
// unknown or unsupported on this machine. Not thread-safe; call at startup.
bool set_backend(std::string_view name);

}  // namespace risopt::kernels
