// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstring>
#include <iostream>

#include "selftest/acceptance.hpp"

int main(int argc, char** argv) {
  gdf::selftest::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-timing") == 0) options.skip_timing = true;
  }
  const auto results = gdf::selftest::run_acceptance(options);
  gdf::selftest::print_results(std::cout, results);
  return gdf::selftest::all_passed(results) ? 0 : 1;
}
