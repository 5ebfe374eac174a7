#pragma once

#include <string>
#include <vector>

namespace zpf::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double residual = 0.0;   // worst observed residual, in the units of tolerance
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

/// The full verification battery with the default configuration and pinned
/// tolerances. The Unruh checks dominate the runtime (a few minutes).
std::vector<CheckResult> run_acceptance_checks();

/// One pass/fail line per criterion.
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace zpf::checks
