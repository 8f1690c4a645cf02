#pragma once

// Hardware-constraint variants that stay tractable: subarrays sharing one
// amplifier, and per-element amplitude caps without a total power budget.

#include <cstddef>
#include <vector>

#include "risopt/model.hpp"

namespace risopt {

// Disjoint nonempty groups of 0-based element indices covering {0..N-1}.
struct SubarrayPartition {
  std::vector<std::vector<std::size_t>> groups;
};

// Throws InvalidInputError unless `partition` is a partition of {0..n-1}.
void validate_partition(const SubarrayPartition& partition, std::size_t n);

// Collapses each group into a single element by summing its coefficients.
// Solving the aggregated problem gives the optimum under the constraint
// that all elements of a group share one amplitude.
AmplitudeProblem aggregate_subarrays(const AmplitudeProblem& prob,
                                     const SubarrayPartition& partition);

// Scatters per-group amplitudes back to a length-n vector.
std::vector<double> expand_subarrays(const SubarrayPartition& partition,
                                     const std::vector<double>& group_amplitudes,
                                     std::size_t n);

struct CapVector {
  std::vector<double> caps;  // per-element upper bounds, all > 0
};

struct CapsSolution {
  std::vector<double> amplitudes;
  double rho = 0.0;  // (1 + sum beta p^2)/(h_d + sum alpha p) at the optimum
};

// Optimum of the reduced objective under 0 <= p_n <= cap_n only (no total
// power budget; gamma is ignored). The KKT system reduces to a piecewise
// linear equation in rho solved by a breakpoint scan.
CapsSolution solve_per_element_caps(const AmplitudeProblem& prob,
                                    const CapVector& caps);

}  // namespace risopt
