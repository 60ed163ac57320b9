#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace malcolmson {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest terms, sign on the numerator, always with a denominator: "0/1", "-2/3".
std::string format_rational(const Rational& q);

/// Accepts "a/b" or "a". Throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Integer parse_integer(std::string_view text);

}  // namespace malcolmson
