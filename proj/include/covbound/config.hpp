#pragma once

#include <cstdint>

namespace covbound {

// Fields are table-driven and capped; nothing in the toolkit needs more.
inline constexpr int kMaxFieldOrder = 256;

// Work budget, counted in elementary distance evaluations (or an equivalent
// unit documented per operation).  Scans estimate their cost up front and
// refuse to start when it exceeds the budget.
std::uint64_t work_budget();
void set_work_budget(std::uint64_t ops);

// Search-space cap for the exact oracles (q^n must stay at or below this).
std::uint64_t oracle_cap();
void set_oracle_cap(std::uint64_t points);

// Guard helper: throws ToolError(Errc::budget_exceeded) with a message naming
// `what` when `cost` exceeds the configured budget.
void check_budget(std::uint64_t cost, const char* what);

}  // namespace covbound
