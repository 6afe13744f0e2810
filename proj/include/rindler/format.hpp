#pragma once

#include <string>

namespace rindler {

// Locale-independent scientific notation with 17 significant digits.
std::string format_sci17(double value);

// Shortest round-trip representation.
std::string format_short(double value);

} // namespace rindler
