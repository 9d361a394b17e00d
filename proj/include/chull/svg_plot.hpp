#pragma once

#include <span>
#include <string>

#include "chull/experiments.hpp"

namespace chull {

// Standalone SVG: one circle per aggregate mean, one path for the fitted
// curve. Log x axis; log y axis for power/polylog, linear y for log.
std::string render_fit_svg(std::span<const AggregateRow> rows, const FitResult& fit,
                           const std::string& title);

}  // namespace chull
