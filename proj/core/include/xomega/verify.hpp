#pragma once

// The verification suite: twelve numbered checks, each reporting pass/fail
// with a one-line detail.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xomega {

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::string golden_dir;
  /// Smaller parameters everywhere; a quick run is a smoke test, not the
  /// acceptance run.
  bool quick = false;
  std::size_t growth_budget_bytes = std::size_t{1} << 30;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCheckCount = 12;

/// Runs check `id` (1..12); exceptions are reported as failures.
CheckResult run_check(int id, const VerifyOptions& options);
std::vector<CheckResult> run_all_checks(const VerifyOptions& options);

/// {"seed": …, "quick": …, "passed": …, "checks": [{id, name, passed, detail}…]}; timings are
/// left out so the report is reproducible.
std::string report_json(const std::vector<CheckResult>& results, const VerifyOptions& options);

}  // namespace xomega
