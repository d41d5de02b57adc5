#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bagwl {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string observed;
  std::string expected;
  std::vector<std::string> failures;  // individual sub-checks that failed
  std::vector<std::string> notes;     // measured but not asserted
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 20220207;
};

inline constexpr int kCriterionCount = 12;

/// Runs one criterion (1..12). Never throws for a failed check; an
/// exception inside a check is reported as a failure.
CheckResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options = {},
                                        std::span<const int> ids = {});

/// "PASS [n] name: observed ... | expected ... (x s, limit y s)"
std::string format_result(const CheckResult& r);

}  // namespace bagwl
