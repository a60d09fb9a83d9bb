#ifndef ORDKIT_SUITES_HPP
#define ORDKIT_SUITES_HPP

#include <string>
#include <vector>

namespace ordkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  long checked = 0;
  long violations = 0;
  double seconds = 0.0;
  double budgetSeconds = 0.0;
  std::vector<std::string> failures;  // first few, for diagnosis
};

struct SuiteOpts {
  int orderSize = 6;          // term size for the order-axiom pool
  long enumCap = 200000;
  long randomTriples = 2000000;
  size_t rankCorpus = 10000;
  int hullSize = 5;
  bool quick = false;         // smaller pools, for ctest smoke use
};

std::vector<CriterionResult> runAllSuites(const SuiteOpts& opts = {});

// "PASS criterion-1 order-axioms (checked 123456, 1.2s <= 120s)"
std::string formatResult(const CriterionResult& r);

}  // namespace ordkit

#endif
