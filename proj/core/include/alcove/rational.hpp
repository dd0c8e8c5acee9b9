#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alcove {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "3/2", "-1", "0".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
bool is_integer(const Rational& value);

/// Narrowing helper for values known to be small; throws std::overflow_error otherwise.
long to_long(const Integer& value);

}  // namespace alcove
