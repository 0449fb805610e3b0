#pragma once

#include <span>
#include <vector>

namespace swiptfog::tools {

/// Abscissae where `gap` changes sign between consecutive finite samples, linearly interpolated
/// (in log10 x when `log_x`). A sample that is exactly zero counts as a crossing at that x.
std::vector<double> crossovers(std::span<const double> x, std::span<const double> gap, bool log_x);

} // namespace swiptfog::tools
