#pragma once

// Verification runner: the acceptance criteria (AC01..AC13) and the module
// invariant suites, each producing a named result with the observed
// quantity and the tolerance it was held to.

#include <string>
#include <vector>

#include "itofrft/coeff_io.hpp"

namespace itofrft::verify {

struct CheckInfo {
  std::string name;
  std::string title;
  double default_tolerance = 0.0;
  bool acceptance = false;
};

struct CheckResult {
  std::string name;
  std::string title;
  bool passed = false;
  double observed = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

/// Every check in run order: acceptance criteria first, then invariants.
const std::vector<CheckInfo>& catalog();

/// Names of the acceptance criteria only.
std::vector<std::string> acceptance_names();

/// Tolerance for a check after config overrides.
double tolerance_for(const CheckInfo& info, const io::RunConfig& cfg);

/// Throws DomainError for an unknown name.
CheckResult run_check(const std::string& name, const io::RunConfig& cfg);

/// Runs the named checks (independent checks may run concurrently) and
/// returns results in the order given.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const io::RunConfig& cfg);

/// report.json contents. Results carry no timing; `timestamp` and the
/// per-check runtimes go under "metadata".
std::string report_json(const std::vector<CheckResult>& results, const std::string& timestamp);

/// One line per check: "PASS AC01 orthonormality observed=... tolerance=...".
std::string format_line(const CheckResult& r);

}  // namespace itofrft::verify
