#include "fgv/rational.hpp"

#include <stdexcept>

namespace fgv {

Rational parse_rational(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return Rational(result);
}

Rational power(const Rational& value, int exponent) {
  Rational result(1);
  const unsigned count = exponent < 0 ? static_cast<unsigned>(-exponent)
                                      : static_cast<unsigned>(exponent);
  for (unsigned i = 0; i < count; ++i) result *= value;
  if (exponent < 0) {
    if (result == 0) throw std::domain_error("zero to a negative power");
    result = 1 / result;
  }
  return result;
}

}  // namespace fgv
