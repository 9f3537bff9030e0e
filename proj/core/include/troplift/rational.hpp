#pragma once

// Exact arbitrary-precision scalars. Rational is used everywhere an exact
// exponent or rational coefficient is needed; Int backs divisor searches and
// binomial coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace troplift {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise (q always positive).
std::string to_string(const Rational& r);

// Accepts "p", "-p/q" and decimal literals like "2.5" (converted exactly).
// Throws ParseError on malformed text or a zero denominator.
Rational rational_from_string(const std::string& text);

}  // namespace troplift
