#pragma once

#include <string>
#include <utility>
#include <vector>

namespace parideal {

// Outcome of one verification check: a human-readable claim, how many
// instances were examined, and descriptions of any counterexamples found.
// Failure messages are capped so a systematically wrong check cannot
// produce unbounded output; the count of suppressed messages is retained.
struct CheckResult {
  std::string claim;
  long long instances_checked = 0;
  std::vector<std::string> failures;
  long long suppressed_failures = 0;

  CheckResult() = default;
  explicit CheckResult(std::string c) : claim(std::move(c)) {}

  static constexpr std::size_t kMaxRecordedFailures = 25;

  bool passed() const { return failures.empty() && suppressed_failures == 0; }

  void add_failure(std::string msg) {
    if (failures.size() < kMaxRecordedFailures) {
      failures.push_back(std::move(msg));
    } else {
      ++suppressed_failures;
    }
  }

  long long failure_count() const {
    return static_cast<long long>(failures.size()) + suppressed_failures;
  }
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }

  long long total_instances() const {
    long long n = 0;
    for (const auto& c : checks) n += c.instances_checked;
    return n;
  }
};

}  // namespace parideal
