#pragma once

// Whole-repository verification sweep.  Each check pits an algorithm
// against an independent way of computing the same thing -- enumeration,
// the matrix oracle, or a closed formula -- and summarizes what it
// covered.  The CLI exposes this as `selftest`; the acceptance runner
// prints one line per check.

#include <string>
#include <vector>

namespace b3 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // coverage summary, or the failure diagnostic
};

struct SelftestReport {
  int max_len = 0;  // exhaustive word sweeps go up to this length
  int radius = 0;   // distance-table comparisons go out this far
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

// The full run is max_len 12, radius 10; smaller bounds give a fast
// profile that exercises every check with shallower sweeps.
SelftestReport run_selftest(int max_len = 12, int radius = 10);

}  // namespace b3
