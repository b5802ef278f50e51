#pragma once

#include <string>
#include <vector>

namespace ellref {

/// One acceptance criterion outcome. measured is the worst observed quantity,
/// compared against the pinned threshold (<= passes unless noted in detail).
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  double runtime_ms = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_pass() const;
  std::string to_json() const;
};

/// Run the full verification battery. Tolerances and configurations are fixed
/// in the implementation; results report honest measurements either way.
SuiteReport run_suite();

}  // namespace ellref
