#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace newton {

/// A search or DP exceeded its configured state budget. Carries the best
/// lower bound established before the budget ran out, so callers can
/// report partial results instead of nothing.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::int64_t partial_lower_bound)
      : std::runtime_error(what), partial(partial_lower_bound) {}
  std::int64_t partial;
};

/// A finite-difference grid failed to reach its polynomial regime within
/// the configured bounds. Reported loudly, never silently truncated.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace newton
