#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qch {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named pass/fail results; failures carry detail text
/// instead of throwing, so a whole suite can be reported at once.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = "") {
    checks.push_back(CheckResult{std::move(name), passed, std::move(detail)});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
};

}  // namespace qch
