#pragma once

#include <string>
#include <vector>

namespace holoqi::verify {

enum class Level { fast, full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;     ///< quantity under test
  double expected = 0.0;  ///< reference it is held against
  double delta = 0.0;     ///< |value - expected| (or margin for inequalities)
  double tolerance = 0.0;
  std::string note;
};

/// Cross-checks of the closed forms against the truncated-Fock engine.
/// `fast` runs the cheap subset (seconds); `full` adds the larger truncations,
/// convergence ratios, and the trace-distance chain (a few minutes at most).
std::vector<CheckResult> run_checks(Level level, int quad_order = 20);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace holoqi::verify
