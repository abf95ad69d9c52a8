#pragma once

#include <string>
#include <vector>

namespace gradedca {

/// Outcome of a verification pass: empty `failures` means every check held.
struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

}  // namespace gradedca
