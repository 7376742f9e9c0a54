#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace gpr {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Always "p/q", including "p/1". Used by the JSON schemas.
std::string to_fraction_string(const Rational& value);

/// Bits needed for |numerator| plus bits for the denominator.
std::size_t bit_length(const Rational& value);

bool is_integer(const Rational& value);

/// True for 0, -1, -2, ... (the set -N with 0 included).
bool in_negative_naturals(const Rational& value);

}  // namespace gpr
