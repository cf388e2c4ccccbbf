#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ddm {

/// Exact rational number; always kept in reduced form.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p" or "-p/q". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Renders as "p/q" (integers as "p/1").
std::string to_string(const Rational& value);

/// Display-only decimal rendering with `digits` fractional digits, rounded half away from zero.
std::string to_decimal(const Rational& value, int digits);

}  // namespace ddm
