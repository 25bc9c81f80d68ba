#pragma once

#include <stdexcept>
#include <string>

namespace hadamard {

/// Two arguments live on different spaces.
class SpaceMismatch : public std::invalid_argument {
 public:
  explicit SpaceMismatch(const std::string& what)
      : std::invalid_argument("space mismatch: " + what) {}
};

/// Coordinates violate the manifold-membership or tangency invariants.
class InvalidPoint : public std::invalid_argument {
 public:
  explicit InvalidPoint(const std::string& what)
      : std::invalid_argument("invalid point: " + what) {}
};

class NotTangent : public std::invalid_argument {
 public:
  explicit NotTangent(const std::string& what)
      : std::invalid_argument("invalid tangent: " + what) {}
};

/// A limit or search did not settle within its budget.
class ConvergenceFailure : public std::runtime_error {
 public:
  explicit ConvergenceFailure(const std::string& what)
      : std::runtime_error("convergence failure: " + what) {}
};

}  // namespace hadamard
