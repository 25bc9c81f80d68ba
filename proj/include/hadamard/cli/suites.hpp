#pragma once

// Named verification suites run by `hadamard_cli verify`.

#include "hadamard/cli/report_io.hpp"
#include "hadamard/grid_kernels.hpp"
#include "hadamard/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hadamard::cli {

/// geometry, horoball, duality, subgradient, rigidity, isometry.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" (case names then carry a
/// "suite/" prefix). Throws UsageError for an unknown name. runtime_ms is
/// left at zero.
SuiteResult run_suite(const std::string& suite, const SpaceDescriptor& space,
                      const std::string& space_label, std::uint64_t seed,
                      ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace hadamard::cli
