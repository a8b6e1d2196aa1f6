#pragma once

#include <boost/rational.hpp>
#include <string>

namespace fairaudit {

// Exact rational arithmetic for coverage rates and thresholds. Verdicts
// must be reproducible bit for bit, so threshold comparisons never go
// through floating point.
using Rat = boost::rational<long long>;

// Accepts "3/4", "0.25", ".5" and plain integers.
Rat parse_rational(const std::string& text);

std::string format_rational(const Rat& r);

double to_double(const Rat& r);

}  // namespace fairaudit
