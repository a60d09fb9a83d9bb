// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line per criterion. Exit status 0 iff all pass within budget.
#include <cstdlib>
#include <iostream>

#include "ordkit/suites.hpp"

int main() {
  ordkit::SuiteOpts opts;
  if (const char* cap = std::getenv("ORDKIT_ENUM_CAP")) opts.enumCap = std::atol(cap);
  bool ok = true;
  for (const auto& r : ordkit::runAllSuites(opts)) {
    std::cout << ordkit::formatResult(r) << "\n" << std::flush;
    ok = ok && r.passed;
    if (r.seconds > r.budgetSeconds) {
      std::cout << "FAIL criterion-" << r.id << " exceeded its runtime budget\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
