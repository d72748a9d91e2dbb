#pragma once

#include <string_view>

#include "lsa/mpoly.hpp"

namespace lsa {

// Parses sums/products/powers of rationals and variables x1, x2, ... with parentheses.
// Division is allowed only by nonzero constants. The result has
// max(min_nvars, largest variable index) variables.
// Throws CodedError("SYNTAX", "column c: ...") on malformed input.
MPoly parse_poly(std::string_view text, std::size_t min_nvars = 0);

}  // namespace lsa
