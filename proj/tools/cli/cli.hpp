#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdf::cli {

/// Exit codes of the gdf tool.
enum Exit : int {
  kOk = 0,
  kDomain = 1,  // infeasible, no order, rejected order, budget
  kUsage = 2,   // bad flags, unreadable or malformed files
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics and the `error: <kind>` line go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdf::cli
