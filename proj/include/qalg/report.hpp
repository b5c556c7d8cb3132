#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qalg {

struct CheckResult {
  std::string id;
  bool passed = true;
  std::string witness; // set on failure: first differing z-order and offending term
  std::int64_t microseconds = 0;
};

/// Outcome of one verification suite over one algebra. Checks keep insertion
/// order, which every producer makes deterministic.
struct CheckReport {
  std::string suite;
  std::string algebra;
  int order = 0;
  std::vector<CheckResult> checks;
  std::int64_t microseconds = 0;

  bool passed() const {
    for (const auto &c : checks)
      if (!c.passed)
        return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto &c : checks)
      n += c.passed ? 0 : 1;
    return n;
  }

  void add(std::string id, bool passed, std::string witness = {}, std::int64_t us = 0) {
    checks.push_back({std::move(id), passed, passed ? std::string{} : std::move(witness), us});
  }

  void append(const CheckReport &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    microseconds += other.microseconds;
  }
};

} // namespace qalg
