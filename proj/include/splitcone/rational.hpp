#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace splitcone {

// Exact rational number used throughout the library.
using Rat = mpq_class;

// Renders p/q, or just p when q == 1.
std::string rat_to_string(const Rat& r);

// Parses "p", "p/q", or a decimal literal like "1.25" (converted exactly).
// Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

} // namespace splitcone
