#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace valrel {

/// Thrown when a computation has used up its reduction-step budget. The
/// computation can be resumed by re-running with a larger budget; for
/// Buchberger runs, `partial_basis_size` reports how far the basis had grown.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t limit, std::size_t partial_basis_size)
      : std::runtime_error("step budget of " + std::to_string(limit) +
                           " reductions exceeded (basis had " + std::to_string(partial_basis_size) +
                           " elements); rerun with a larger --step-budget"),
        limit_(limit),
        partial_basis_size_(partial_basis_size) {}

  std::uint64_t limit() const { return limit_; }
  std::size_t partial_basis_size() const { return partial_basis_size_; }

 private:
  std::uint64_t limit_;
  std::size_t partial_basis_size_;
};

/// Counts reduction steps across one computation.
class StepBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 2'000'000;

  explicit StepBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::size_t basis_size = 0) {
    if (++used_ > limit_) throw BudgetExceeded(limit_, basis_size);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace valrel
