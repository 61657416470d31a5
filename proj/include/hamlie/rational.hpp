#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hamlie {

/// Exact rationals. mpq_class keeps values canonical (positive denominator,
/// reduced) as long as every constructed value goes through canonicalize().
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0) and
/// returns the reduced value. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

/// Smallest integer >= |value|, as a machine integer. Throws
/// std::overflow_error if it does not fit in a long.
long ceil_abs(const Rational& value);

} // namespace hamlie
