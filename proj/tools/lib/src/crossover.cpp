#include "swiptfog_tools/crossover.hpp"

#include <cmath>
#include <stdexcept>

namespace swiptfog::tools {

std::vector<double> crossovers(std::span<const double> x, std::span<const double> gap, bool log_x) {
    if (x.size() != gap.size()) throw std::invalid_argument("x and gap differ in length");
    std::vector<double> out;
    int prev = -1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(gap[i])) continue;
        if (gap[i] == 0.0) {
            out.push_back(x[i]);
            prev = -1;
            continue;
        }
        if (prev >= 0 && (gap[static_cast<std::size_t>(prev)] > 0.0) != (gap[i] > 0.0)) {
            const auto j = static_cast<std::size_t>(prev);
            const double t = gap[j] / (gap[j] - gap[i]);
            if (log_x) {
                const double a = std::log10(x[j]);
                const double b = std::log10(x[i]);
                out.push_back(std::pow(10.0, a + t * (b - a)));
            } else {
                out.push_back(x[j] + t * (x[i] - x[j]));
            }
        }
        prev = static_cast<int>(i);
    }
    return out;
}

} // namespace swiptfog::tools
