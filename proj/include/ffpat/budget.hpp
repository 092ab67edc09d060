#ifndef FFPAT_BUDGET_HPP
#define FFPAT_BUDGET_HPP

#include "ffpat/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffpat {

inline constexpr std::uint64_t kDefaultMemberBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultScanBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_budget(const BigInt& need, std::uint64_t budget, const std::string& what) {
  if (need > budget) {
    throw BudgetExceeded(what + ": " + to_string(need) + " items exceed the budget of " + std::to_string(budget));
  }
}

}  // namespace ffpat

#endif  // FFPAT_BUDGET_HPP
