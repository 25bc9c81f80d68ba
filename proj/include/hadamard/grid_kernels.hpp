#pragma once

// Data-parallel evaluation kernels. Each kernel has a serial reference and an
// OpenMP variant; both write results by index, so reductions over the output
// are identical regardless of schedule.

#include <functional>
#include <vector>

namespace hadamard {

enum class ExecutionPolicy { Serial, Parallel };

namespace kernels {

using IndexedFn = std::function<double(int)>;

std::vector<double> evaluate_serial(const IndexedFn& fn, int count);
/// OpenMP version. The first exception thrown by any worker is rethrown.
std::vector<double> evaluate_parallel(const IndexedFn& fn, int count);

inline std::vector<double> evaluate(const IndexedFn& fn, int count, ExecutionPolicy policy) {
  return policy == ExecutionPolicy::Parallel ? evaluate_parallel(fn, count)
                                             : evaluate_serial(fn, count);
}

/// Index of the minimum; ties resolved to the lowest index.
int argmin(const std::vector<double>& values);

}  // namespace kernels
}  // namespace hadamard
