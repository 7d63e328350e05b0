#pragma once

#include <string_view>

#include "fgv/bivar_poly.hpp"
#include "fgv/rational_function.hpp"

namespace fgv {

/// Parses the polynomial grammar: terms joined by '+'/'-', each term an
/// optional integer or integer/integer coefficient followed by x[^a] and
/// y[^b] factors. Whitespace is ignored, juxtaposition (or '*') multiplies.
/// Examples: "y^2", "2/3x^3 - x y^2". Throws ParseError with the position.
BivarPoly parse_polynomial(std::string_view text);

/// Accepts a polynomial or "(p)/(q)". Throws ParseError.
RationalFunction parse_rational_function(std::string_view text);

}  // namespace fgv
