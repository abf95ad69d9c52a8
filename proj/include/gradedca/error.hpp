#pragma once

#include <stdexcept>
#include <string>

namespace gradedca {

// Malformed or out-of-contract input (bad index, invalid grading, parse error).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource limit tripped before a computation closed.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed: a mathematical fact the code relies on
// (exact division, homogeneity, flip/mutation agreement) did not hold.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gradedca
