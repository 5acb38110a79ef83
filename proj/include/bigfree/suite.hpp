#pragma once

// Property suite: the acceptance criteria (C1..C12) and the per-module
// invariants (P*), each run over seeded samples or exhaustive small sets.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bigfree {

struct SuiteOptions {
  std::uint64_t seed = 20240917;
  std::size_t samples = 10000;
  bool parallel = true;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a summary when passing
  double seconds = 0;
};

struct SuiteCheck {
  std::string id;
  std::string title;
  std::function<CheckResult(const SuiteOptions&)> run;
};

std::vector<SuiteCheck> suite_checks();

// Runs every check, concurrently when options.parallel is set. Results come
// back in suite order regardless.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

CheckResult run_check(const std::string& id, const SuiteOptions& options);

// "PASS C1 unique reduced form (50000 cases, 1.23 s) ..." without the
// timing when `with_timing` is false, so output stays byte-deterministic.
std::string format_result(const CheckResult& result, bool with_timing = false);

}  // namespace bigfree
