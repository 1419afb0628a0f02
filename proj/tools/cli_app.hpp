#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvesys::cli {

/// Runs one subcommand. JSON goes to `out` (or --out), diagnostics to `err`.
/// Returns 0 on success, 1 on violations or certification failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvesys::cli
