// Runs the full verification sweep at the standard bounds and prints one
// line per check.  Exit status 0 only when every check passes.

#include <cstdio>

#include "selftest.hpp"

int main() {
  b3::SelftestReport report = b3::run_selftest(12, 10);
  int n = 0;
  for (const b3::CheckResult& c : report.checks) {
    ++n;
    std::printf("%s %d. %s — %s\n", c.pass ? "PASS" : "FAIL", n,
                c.name.c_str(), c.detail.c_str());
  }
  if (!report.all_passed()) {
    std::printf("verification FAILED\n");
    return 1;
  }
  std::printf("all %d checks passed (lengths to %d, radius %d)\n", n,
              report.max_len, report.radius);
  return 0;
}
