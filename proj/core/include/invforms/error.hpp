#pragma once

#include <stdexcept>
#include <string>

namespace invforms {

/// Raised for malformed or out-of-contract user input (bad datum strings,
/// non-dominant weights, non-prime moduli, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computed quantity contradicts a proven identity.  Reaching
/// this means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace invforms
