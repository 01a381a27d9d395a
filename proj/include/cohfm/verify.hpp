#pragma once

#include <string>
#include <vector>

#include "cohfm/report.hpp"

namespace cohfm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // exact witness on failure, empty on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
};

// Suites: ring-V, ring-Vdual, ring-S, ring-ExE, isogeny, fm-matrix,
// grr-table, scroll-rr, euler, spectral, stability, lattice.
const std::vector<std::string>& verification_suite_names();
// Throws Error on an unknown suite name.
SuiteResult run_verification_suite(const std::string& name);
std::vector<SuiteResult> run_all_suites();

ReportNode suite_report(const SuiteResult& result);

}  // namespace cohfm
