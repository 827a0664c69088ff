#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zkdesk {

/// Raised when an operation's stated precondition does not hold.
/// Mapped to exit code 1 by the CLI.
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a construction or enumeration would exceed the input-bit budget.
/// Mapped to exit code 2 by the CLI.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default cap on total circuit input bits for exhaustive enumeration.
inline constexpr uint32_t kDefaultBudgetBits = 24;

/// Budget in effect: ZK_BUDGET_BITS environment override, else the default.
uint32_t budget_bits();

} // namespace zkdesk
