#pragma once

#include <stdexcept>
#include <string>

namespace bsdist {

/// Thrown when an enumeration would exceed its leaf or rank budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultBudget = 20'000'000;

}  // namespace bsdist
