#pragma once

#include <string>

#include "json.hpp"

namespace curvesys {

/// Rounds to 12 significant digits so reports diff cleanly.
double round12(double x);
std::string fmt_num(double x);

/// Pretty JSON with a trailing newline; key order is insertion-independent (sorted).
std::string dump_report(const nlohmann::json& j);

}  // namespace curvesys
