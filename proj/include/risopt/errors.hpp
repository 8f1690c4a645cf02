#pragma once

#include <stdexcept>
#include <string>

namespace risopt {

// Bad user-supplied data: malformed files, dimension mismatches, invalid
// parameter combinations. CLI maps this family to exit code 2.
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// snr2 = 0: the surface has no radiated-power budget, so the budget weights
// are undefined. Callers should fall back to the pure direct-link SNR.
struct DegenerateBudgetError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

// Nothing to optimize: no direct link and no usable surface path.
struct NoSignalError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

// An iterative method hit its iteration cap before reaching tolerance.
// CLI maps this to exit code 3.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, double last_iterate, int iterations)
      : std::runtime_error(msg), last_iterate(last_iterate), iterations(iterations) {}
  double last_iterate;
  int iterations;
};

}  // namespace risopt
