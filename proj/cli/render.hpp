#pragma once

#include <string>

#include "report.hpp"

namespace numrange::cli {

/// theta,lambda,x,y rows from results.boundary, 17 significant digits.
/// Throws UsageError when the report carries no boundary.
std::string render_csv(const RunReport& report);

/// Unit circle, the boundary polyline from results.boundary and every polygon
/// in results.polygons.
std::string render_svg(const RunReport& report);

}  // namespace numrange::cli
