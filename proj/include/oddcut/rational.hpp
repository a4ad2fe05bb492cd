#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddcut {

/// Exact rational, always normalized with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p/q" or an integer literal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "0/1", "3/4", "-5/2".
std::string to_fraction_string(const Rational& value);

/// "p" for integers, "p/q" otherwise.
std::string to_compact_string(const Rational& value);

}  // namespace oddcut
