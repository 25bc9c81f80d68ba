#pragma once

#include <string>
#include <vector>

namespace hadamard::cli {

/// Exit codes: 0 all cases pass, 1 a case failed, 2 usage or I/O error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace hadamard::cli
