#pragma once

#include <string>

namespace polyharm {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

}  // namespace polyharm
