#pragma once

#include <cstdint>
#include <stdexcept>
#include <stop_token>
#include <string>

namespace okpack {

// Base for every "search was cut short" outcome. Callers that only care
// whether an answer is available catch this one.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration produced more items than its cap allows.
class CapExceeded : public SearchLimitError {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap, std::uint64_t partial)
      : SearchLimitError(what + " (cap " + std::to_string(cap) + ", reached " +
                         std::to_string(partial) + ")"),
        cap_(cap),
        partial_(partial) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t partial() const noexcept { return partial_; }

 private:
  std::uint64_t cap_;
  std::uint64_t partial_;
};

// A branching search expanded more nodes than its budget allows.
class BudgetExceeded : public SearchLimitError {
 public:
  using SearchLimitError::SearchLimitError;
};

// Input exceeds the hard size limit of a brute-force oracle.
class TooLarge : public SearchLimitError {
 public:
  using SearchLimitError::SearchLimitError;
};

// Cooperative node budget for long searches. Not thread-safe; give each
// worker its own.
class Budget {
 public:
  explicit Budget(std::uint64_t limit, std::stop_token stop = {})
      : limit_(limit), stop_(std::move(stop)) {}

  void charge(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw BudgetExceeded("search budget of " + std::to_string(limit_) +
                           " nodes exhausted");
    }
    if (stop_.stop_requested()) throw BudgetExceeded("search cancelled");
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::stop_token stop_;
};

}  // namespace okpack
