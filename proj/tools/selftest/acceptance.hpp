#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gdf::selftest {

struct AcceptanceOptions {
  std::uint64_t seed = 20241019;
  /// Skip the wall-clock scaling check (criterion 5 still checks touches).
  bool skip_timing = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion; each one is independent of the others.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One `PASS|FAIL [id] title: detail (seconds)` line per criterion.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace gdf::selftest
