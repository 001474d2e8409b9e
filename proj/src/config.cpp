#include "covbound/config.hpp"

#include <atomic>
#include <string>

#include "covbound/errors.hpp"

namespace covbound {

namespace {
std::atomic<std::uint64_t> g_budget{std::uint64_t{1} << 26};
std::atomic<std::uint64_t> g_oracle_cap{729};  // 3^6
}  // namespace

std::uint64_t work_budget() { return g_budget.load(); }
void set_work_budget(std::uint64_t ops) { g_budget.store(ops); }

std::uint64_t oracle_cap() { return g_oracle_cap.load(); }
void set_oracle_cap(std::uint64_t points) { g_oracle_cap.store(points); }

void check_budget(std::uint64_t cost, const char* what) {
  if (cost > work_budget()) {
    fail(Errc::budget_exceeded,
         std::string(what) + ": estimated cost " + std::to_string(cost) +
             " exceeds budget " + std::to_string(work_budget()));
  }
}

}  // namespace covbound
