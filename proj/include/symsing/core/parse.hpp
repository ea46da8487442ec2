#pragma once

#include <string>

#include "symsing/core/poly.hpp"

namespace symsing {

/// Reads a rational polynomial such as "3/2*x^2*y - (x + y)^3 + 7" over the given ring.
/// Throws std::invalid_argument with the offending position on malformed input.
QPoly parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace symsing
