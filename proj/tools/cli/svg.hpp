#pragma once

#include <string>
#include <string_view>

#include "problem_io.hpp"

namespace tropic::cli {

/// Standalone SVG 1.1 figure of a two-row max-plus or max-times instance:
/// the span of the columns (a strip, or a cone for max-times), d with its
/// nearest point and half-space projections, and for `extended` the set
/// reachable by Ax (+) b. Throws CliError(UnsupportedPlot) otherwise.
std::string render_svg(std::string_view command, const ProblemDocument& doc, double tolerance);

}  // namespace tropic::cli
