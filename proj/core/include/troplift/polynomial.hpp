#pragma once

// Sparse multivariate polynomials in x_1..x_n: SeriesPoly has Puiseux-series
// coefficients, FieldPoly plain field coefficients. Terms are keyed by the
// exponent vector (length n, nonnegative); no stored coefficient is zero
// (a truncated-empty series coefficient O(t^T) is not known to be zero and is
// kept). The zero polynomial is the empty term map.

#include <map>
#include <string>
#include <vector>

#include "troplift/field.hpp"
#include "troplift/series.hpp"

namespace troplift {

using Multidegree = std::vector<unsigned>;

struct SeriesPoly {
  int n = 0;
  std::map<Multidegree, PuiseuxSeries> terms;

  bool is_zero() const { return terms.empty(); }
};

struct FieldPoly {
  int n = 0;
  std::map<Multidegree, FieldElement> terms;

  bool is_zero() const { return terms.empty(); }
};

bool operator==(const SeriesPoly& a, const SeriesPoly& b);
inline bool operator!=(const SeriesPoly& a, const SeriesPoly& b) { return !(a == b); }
bool operator==(const FieldPoly& a, const FieldPoly& b);
inline bool operator!=(const FieldPoly& a, const FieldPoly& b) { return !(a == b); }

// Accumulating insert; drops coefficients that become exact zero.
void add_term(const Field& K, SeriesPoly& f, const Multidegree& i, const PuiseuxSeries& c);
void add_term(const Field& K, FieldPoly& p, const Multidegree& i, const FieldElement& c);

SeriesPoly add(const Field& K, const SeriesPoly& f, const SeriesPoly& g);
SeriesPoly neg(const SeriesPoly& f);
SeriesPoly mul(const Field& K, const SeriesPoly& f, const SeriesPoly& g);
SeriesPoly pow(const Field& K, const SeriesPoly& f, unsigned long e);

FieldPoly add(const Field& K, const FieldPoly& p, const FieldPoly& q);
FieldPoly neg(const Field& K, const FieldPoly& p);
FieldPoly mul(const Field& K, const FieldPoly& p, const FieldPoly& q);
FieldPoly scale(const Field& K, const FieldPoly& p, const FieldElement& c);

// Monomial rescaling x_i -> x_i t^{b_i}: each coefficient is shifted by the
// inner product <i, b>; the support is unchanged.
SeriesPoly substitute_scaled(const SeriesPoly& f, const std::vector<Rational>& b);

// Substitutes the exact series s for variable j (0-based); the result lives
// in the remaining n-1 variables, original order preserved.
SeriesPoly substitute_coordinate(const Field& K, const SeriesPoly& f, int j,
                                 const PuiseuxSeries& s);

// Full substitution of a point with series coordinates.
PuiseuxSeries evaluate(const Field& K, const SeriesPoly& f,
                       const std::vector<PuiseuxSeries>& point);

// Horner-style evaluation in the coefficient field.
FieldElement evaluate(const Field& K, const FieldPoly& p,
                      const std::vector<FieldElement>& point);

// x_j -> c, result in the remaining n-1 variables.
FieldPoly partial_substitute(const Field& K, const FieldPoly& p, int j,
                             const FieldElement& c);

struct FactorMultiplicity {
  int multiplicity = 0;  // largest k with (x_j - c)^k dividing p
  FieldPoly quotient;    // p / (x_j - c)^k, still in n variables
};

// Repeated synthetic division by (x_j - c) viewing p as univariate in x_j
// with polynomial coefficients. DomainError on the zero polynomial.
FactorMultiplicity factor_multiplicity(const Field& K, const FieldPoly& p, int j,
                                       const FieldElement& c);

// Roots of a univariate FieldPoly (delegates to Field::roots_univariate).
std::vector<FieldElement> roots_univariate(const Field& K, const FieldPoly& p);

// Rendering with the caller's variable names. Terms are ordered by total
// degree, then lexicographically descending exponent vectors, so x sorts
// before y inside a degree block. Multi-term series coefficients are
// parenthesized; the output parses back to an equal polynomial.
std::string to_string(const Field& K, const SeriesPoly& f,
                      const std::vector<std::string>& names);
std::string to_string(const Field& K, const FieldPoly& p,
                      const std::vector<std::string>& names);

// Display order used by the renderers and the CLI term listings.
std::vector<Multidegree> display_order(const std::vector<Multidegree>& keys);

}  // namespace troplift
