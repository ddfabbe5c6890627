#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace urnsect {

/// A distribution or command parameter violates a documented invariant.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration would exceed its outcome budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t outcomes, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(outcomes) +
                           " outcomes, budget is " + std::to_string(budget)),
        outcomes_(outcomes) {}

  std::uint64_t outcomes() const noexcept { return outcomes_; }

 private:
  std::uint64_t outcomes_;
};

/// Malformed or inconsistent input data (membership files, matrices).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace urnsect
