#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcong {

enum class SuiteLevel { quick, full };
/// Throws std::invalid_argument.
SuiteLevel parse_level(std::string_view name);

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  /// Reported only; never breaks the exit code.
  bool conjectural = false;
  std::string detail;
  /// First few failures with their witnesses.
  std::vector<std::string> failures;
};

/// Runs the six acceptance criteria. quick shrinks the sweeps to a few seconds.
std::vector<CriterionResult> run_suite(SuiteLevel level, unsigned jobs);

/// "criterion 2 proven q-congruences: PASS (...)" plus indented failures.
std::string render_criterion(const CriterionResult& c);

/// 1 when a non-conjectural criterion failed, else 0.
int suite_exit_code(std::span<const CriterionResult> results);

}  // namespace qcong
