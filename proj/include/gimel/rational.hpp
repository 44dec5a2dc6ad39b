#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gimel {

using Rational = mpq_class;

// Accepts "p", "-p" or "p/q"; the result is canonical.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

mpz_class floor(const Rational& value);
mpz_class ceil(const Rational& value);
Rational abs(const Rational& value);

// Decimal rendering with exactly `digits` fractional digits, rounded half away
// from zero. Used only for plot output.
std::string to_decimal(const Rational& value, int digits);

}  // namespace gimel
