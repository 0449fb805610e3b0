#pragma once

#include <string>

namespace swiptfog {

/// Shortest decimal that parses back to the same double, independent of the C locale.
std::string format_number(double value);

} // namespace swiptfog
