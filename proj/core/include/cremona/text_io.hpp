#pragma once

#include <string>

#include "cremona/polynomial.hpp"

namespace cremona {

class RationalFunction;

/// Canonical text form: terms in the monomial order joined by " + " / " - ",
/// coefficients as integers or "a/b", variables joined by "*" with "^"
/// powers. Examples: "x^2 - 1", "3/2*x*y + z", "0". The same grammar is
/// parsed back; emit/parse round-trips exactly.
std::string to_text(const Polynomial& p);

/// Parses the canonical grammar. Variable names must already exist in the
/// registry unless declare_missing is set. Accepts U+2212 as a minus sign.
Polynomial parse_polynomial(const RegistryPtr& reg, const std::string& text,
                            bool declare_missing = false);

/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_text(const RationalFunction& f);
RationalFunction parse_rational_function(const RegistryPtr& reg, const std::string& text,
                                         bool declare_missing = false);

}  // namespace cremona
