#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nichols {

/// Malformed or inconsistent input (bad indices, non-invertible data, parse errors).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero in an exact field.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A configured size cap or search budget was exceeded.  Never means "no answer".
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock and size limits for the expensive engines.
struct Budget {
  double seconds = 600.0;
  std::uint64_t max_entries = 50'000'000;

  static Budget unlimited() { return {1e18, UINT64_MAX}; }
};

/// Starts the clock for a Budget and answers "still within limits?".
class BudgetClock {
public:
  explicit BudgetClock(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool time_exceeded() const { return elapsed() > budget_.seconds; }
  bool entries_exceeded(std::uint64_t n) const { return n > budget_.max_entries; }
  const Budget& budget() const { return budget_; }

  void check(std::uint64_t entries = 0) const {
    if (time_exceeded()) throw BudgetExceeded("wall-clock budget exceeded");
    if (entries_exceeded(entries)) throw BudgetExceeded("entry budget exceeded");
  }

private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace nichols
