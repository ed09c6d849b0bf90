#pragma once

#include <string>
#include <vector>

namespace extremal {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Worst observed error against its tolerance.
  std::string detail;
};

struct VerifyOptions {
  /// Adds degrees up to 8 and the numeric ascent oracle.
  bool deep = false;
  /// Relative tolerance for oracle comparisons.
  double tol_oracle = 1e-8;
};

std::vector<CheckResult> run_verify(const VerifyOptions &options);

/// One line per check, then a summary line; deterministic for fixed options.
std::string render_report(const std::vector<CheckResult> &checks);

bool all_passed(const std::vector<CheckResult> &checks);

} // namespace extremal
