#include "hadamard/grid_kernels.hpp"

#include <omp.h>

#include <exception>
#include <limits>

namespace hadamard::kernels {

std::vector<double> evaluate_serial(const IndexedFn& fn, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  return out;
}

std::vector<double> evaluate_parallel(const IndexedFn& fn, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  std::exception_ptr failure;
  // Nested calls (an inner conjugate inside an outer grid) run serially.
  if (omp_in_parallel()) return evaluate_serial(fn, count);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(i);
    } catch (...) {
#pragma omp critical(hadamard_kernel_failure)
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

int argmin(const std::vector<double>& values) {
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (best < 0 || values[i] < best_value) {
      best = static_cast<int>(i);
      best_value = values[i];
    }
  }
  return best;
}

}  // namespace hadamard::kernels
