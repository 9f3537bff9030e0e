#pragma once

// Text input for polynomials over Puiseux-series coefficients. Grammar:
// integer/rational/decimal literals, the reserved series variable t with
// rational exponents (t^3, t^(1/2), t^(-2)), declared polynomial variables
// with nonnegative integer exponents, and + - * ^ with parentheses. No
// implicit multiplication; whitespace is insignificant.

#include <string>
#include <vector>

#include "troplift/field.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/series.hpp"

namespace troplift {

struct ParsedPolynomial {
  SeriesPoly poly;
  std::vector<std::string> variables;
};

// Parses text into a polynomial. With declared variables the order is fixed
// and unknown identifiers are rejected; otherwise variables are numbered by
// first appearance. Like terms are combined and exact-zero coefficients
// dropped; a zero result raises ZeroPolynomialError.
ParsedPolynomial parse_polynomial(const Field& K, const std::string& text,
                                  const std::vector<std::string>& declared = {});

// Same grammar restricted to t alone (a point coordinate); zero is allowed.
PuiseuxSeries parse_series(const Field& K, const std::string& text);

}  // namespace troplift
