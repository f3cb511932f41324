#pragma once

#include <stdexcept>
#include <string>

namespace qbound {

/// Raised when an input violates a documented precondition (dimensions,
/// domains, commutativity, malformed files).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a configured resource cap (stored clusters, brute-force
/// feasibility) would be exceeded. Never silently truncates results.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbound
