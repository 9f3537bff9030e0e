#pragma once

// Puiseux series in t: a finite sorted list of (exponent, coefficient) terms
// plus a truncation marker. truncation == nullopt means the series is exact
// (all omitted terms are genuinely zero); truncation == T means terms with
// exponent >= T are unknown, written O(t^T). Invariants: exponents strictly
// increase, no stored coefficient is zero, and every exponent < truncation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troplift/field.hpp"
#include "troplift/rational.hpp"

namespace troplift {

struct PuiseuxSeries {
  std::vector<std::pair<Rational, FieldElement>> terms;
  std::optional<Rational> truncation;

  bool exact() const { return !truncation.has_value(); }
  bool is_exact_zero() const { return terms.empty() && exact(); }
};

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
inline bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }

PuiseuxSeries series_zero();
PuiseuxSeries series_constant(const Field& K, const FieldElement& c);
// c * t^e (exact); collapses to exact zero when c is zero.
PuiseuxSeries series_term(const Field& K, const Rational& e, const FieldElement& c);

// Order of the series; nullopt encodes +infinity (exact zero only).
// Throws IndeterminatePrecision when no term is known but the series is
// truncated (the order is only bounded below by the truncation).
std::optional<Rational> order(const PuiseuxSeries& s);

// Largest certified lower bound on the order: first exponent, else the
// truncation, else nullopt (+infinity) for the exact zero. Never throws.
std::optional<Rational> order_lower_bound(const PuiseuxSeries& s);

// Coefficient of the order term. DomainError when no term is known.
FieldElement principal_coefficient(const PuiseuxSeries& s);

PuiseuxSeries add(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries sub(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries neg(const PuiseuxSeries& a);
// Truncation of a product: min over o(a)+T(b) and o(b)+T(a) (exact inputs
// give an exact product; multiplication by exact zero gives exact zero).
PuiseuxSeries mul(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries pow(const Field& K, const PuiseuxSeries& s, unsigned long e);

// Drops terms with exponent >= T and tightens truncation to min(T, existing).
PuiseuxSeries truncate(const PuiseuxSeries& s, const Rational& T);

// s * t^delta and s * c.
PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& delta);
PuiseuxSeries scale(const Field& K, const PuiseuxSeries& s, const FieldElement& c);

// Ascending terms joined with +/-, exponents as t, t^k or t^(p/q), truncation
// as a trailing + O(t^T). The exact zero renders as "0".
std::string to_string(const Field& K, const PuiseuxSeries& s);

// t-power atom used by renderers: "1", "t", "t^3", "t^(1/2)", "t^(-2)".
std::string t_power_text(const Rational& e);

}  // namespace troplift
