#pragma once

// Tropicalization of a polynomial over Puiseux series: each monomial maps to
// the order of its coefficient, the tropical value at b is the min of
// a_i + <i, b>, and b lies on the tropical hypersurface exactly when the min
// is attained at least twice. The initial form collects the principal
// coefficients of the argmin monomials.

#include <optional>
#include <utility>
#include <vector>

#include "troplift/polynomial.hpp"

namespace troplift {

struct TropicalPoly {
  int n = 0;
  // Sorted by multidegree; a_i is the order of the coefficient of x^i.
  std::vector<std::pair<Multidegree, Rational>> terms;
};

struct TropEvalResult {
  Rational value;
  std::vector<Multidegree> argmin;  // sorted
};

// DomainError on the zero polynomial; IndeterminatePrecision when a
// coefficient has no known term (its order is only bounded by a truncation).
TropicalPoly tropicalize(const SeriesPoly& f);

TropEvalResult trop_eval(const TropicalPoly& T, const std::vector<Rational>& b);

// argmin has at least two elements.
bool is_member(const TropicalPoly& T, const std::vector<Rational>& b);

// Sum of pc(coefficient) * x^i over the argmin monomials.
FieldPoly initial_form(const SeriesPoly& f, const std::vector<Rational>& b);

// Second-smallest distinct exponent of f(x t^b)'s t-support minus the
// smallest; nullopt when the scaled polynomial has a single exponent layer.
// Requires every coefficient exact (IndeterminatePrecision otherwise).
std::optional<Rational> epsilon_gap(const SeriesPoly& f, const std::vector<Rational>& b);

// Negated slopes of the lower convex hull of {(i, a_i)}, ascending. Empty
// when f has fewer than two monomials. DomainError unless f is univariate.
std::vector<Rational> newton_polygon_candidates(const SeriesPoly& f);

}  // namespace troplift
