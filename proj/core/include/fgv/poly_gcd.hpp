#pragma once

#include "fgv/bivar_poly.hpp"
#include "fgv/errors.hpp"

namespace fgv {

/// Greatest common divisor normalized to graded-lex leading coefficient 1
/// (zero when both inputs are zero).
BivarPoly gcd(const BivarPoly& p, const BivarPoly& q);

}  // namespace fgv
