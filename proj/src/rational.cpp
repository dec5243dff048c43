#include "symalg/rational.hpp"

#include <stdexcept>

namespace symalg {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    // Division canonicalizes (lowest terms, positive denominator); the
    // mpq string constructor would not.
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a fraction string: '" + text + "'");
  }
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace symalg
