#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "troplift/errors.hpp"
#include "troplift/parse.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/tropical.hpp"

using namespace troplift;
using testsupport::Rng;

namespace {

SeriesPoly p_(const Field& K, const char* text, const std::vector<std::string>& vars) {
  return parse_polynomial(K, text, vars).poly;
}

FieldPoly monomials_at_one(const Field& K, const SeriesPoly& f) {
  // direct power-sum evaluation oracle support: coefficients at t-free polys
  FieldPoly p;
  p.n = f.n;
  for (const auto& [i, c] : f.terms) {
    REQUIRE(c.exact());
    REQUIRE(c.terms.size() == 1);
    REQUIRE(c.terms[0].first == Rational(0));
    add_term(K, p, i, c.terms[0].second);
  }
  return p;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("ring operations agree with the distributive expansion") {
  Field K;
  Rng rng(20260811);
  for (int i = 0; i < 60; ++i) {
    int n = rng.range(1, 3);
    SeriesPoly a = testsupport::random_poly(K, rng, n, 3, 2);
    SeriesPoly b = testsupport::random_poly(K, rng, n, 3, 2);
    SeriesPoly c = testsupport::random_poly(K, rng, n, 3, 2);
    CHECK(mul(K, a, b) == mul(K, b, a));
    CHECK(mul(K, a, add(K, b, c)) == add(K, mul(K, a, b), mul(K, a, c)));
    CHECK(add(K, a, neg(a)).is_zero());
    CHECK(pow(K, a, 2) == mul(K, a, a));
  }
}

TEST_CASE("monomial rescaling shifts coefficients by the inner product") {
  Field K;
  auto parsed = testsupport::sample_curve(K);
  SeriesPoly scaled = substitute_scaled(parsed.poly, {Rational(1), Rational(0)});
  // x-monomial coefficient 3t picks up t^1: support is unchanged, orders move
  CHECK(scaled.terms.at({1, 0}) == parse_series(K, "3*t^2"));
  CHECK(scaled.terms.at({0, 0}) == parse_series(K, "-3*t^2"));
  CHECK(scaled.terms.at({1, 1}) == parse_series(K, "t^2"));
  CHECK(scaled.terms.at({5, 0}) == parse_series(K, "t^5"));
  CHECK(scaled.terms.at({1, 4}) == parse_series(K, "-t^4"));
  CHECK(scaled.terms.size() == parsed.poly.terms.size());
}

TEST_CASE("coordinate substitution reproduces the worked intermediate") {
  Field K;
  auto parsed = testsupport::sample_curve(K);
  SeriesPoly g = substitute_coordinate(K, parsed.poly, 0, parse_series(K, "t + t^2"));
  CHECK(g == testsupport::sample_curve_after_first_step(K));
}

TEST_CASE("substitution and rescaling commute") {
  Field K;
  Rng rng(20260812);
  for (int i = 0; i < 40; ++i) {
    int n = rng.range(2, 3);
    SeriesPoly f = testsupport::random_poly(K, rng, n, 4, 2);
    std::vector<Rational> b;
    for (int v = 0; v < n; ++v) b.push_back(rng.exponent(-2, 2, 2));
    int j = rng.below(n);
    FieldElement gamma = K.from_rational(rng.nonzero_rational(4, 2));

    // substitute x_j = gamma t^{b_j} before or after rescaling by t^b
    SeriesPoly left =
        substitute_coordinate(K, substitute_scaled(f, b), j, series_constant(K, gamma));
    std::vector<Rational> rest(b);
    rest.erase(rest.begin() + j);
    SeriesPoly right = substitute_scaled(
        substitute_coordinate(K, f, j, series_term(K, b[j], gamma)), rest);
    CHECK(left == right);
  }
}

TEST_CASE("evaluation goldens") {
  Field K;
  auto parsed = testsupport::sample_curve(K);
  // along x = t the quartic tail collapses to t^5 (1 + y^4)
  PuiseuxSeries at_t_1 =
      evaluate(K, parsed.poly, {parse_series(K, "t"), parse_series(K, "1")});
  CHECK(at_t_1 == parse_series(K, "2*t^5"));

  PuiseuxSeries at_root = evaluate(
      K, parsed.poly, {testsupport::sample_lifted_x(K), testsupport::sample_lifted_y(K)});
  CHECK(at_root.is_exact_zero());

  CHECK_THROWS_AS(evaluate(K, parsed.poly, {parse_series(K, "t")}), DomainError);
}

TEST_CASE("field-polynomial evaluation agrees with the power sum") {
  Field K;
  Rng rng(20260813);
  for (int i = 0; i < 60; ++i) {
    int n = rng.range(1, 3);
    FieldPoly p;
    p.n = n;
    int count = rng.range(1, 4);
    for (int m = 0; m < count; ++m) {
      Multidegree idx(n);
      for (int v = 0; v < n; ++v) idx[v] = static_cast<unsigned>(rng.range(0, 3));
      add_term(K, p, idx, K.from_rational(rng.nonzero_rational(5, 3)));
    }
    std::vector<FieldElement> point;
    for (int v = 0; v < n; ++v) point.push_back(K.from_rational(rng.nonzero_rational(3, 2)));

    FieldElement direct = K.zero();
    for (const auto& [idx, c] : p.terms) {
      FieldElement term = c;
      for (int v = 0; v < n; ++v) term = K.mul(term, K.pow(point[v], idx[v]));
      direct = K.add(direct, term);
    }
    CHECK(evaluate(K, p, point) == direct);
  }
}

TEST_CASE("partial substitution slices") {
  Field K;
  // -3 + 3x - y + xy = (x - 1)(y + 3)
  FieldPoly p = initial_form(p_(K, "-3 + 3*x - y + x*y", {"x", "y"}), {Rational(0), Rational(0)});
  CHECK(partial_substitute(K, p, 0, K.one()).is_zero());
  CHECK(partial_substitute(K, p, 1, K.from_int(-3)).is_zero());
  FieldPoly at_x2 = partial_substitute(K, p, 0, K.from_int(2));  // y + 3
  REQUIRE(at_x2.terms.size() == 2);
  CHECK(at_x2.terms.at({0}) == K.from_int(3));
  CHECK(at_x2.terms.at({1}) == K.one());
}

TEST_CASE("linear factor multiplicity") {
  Field K;
  // (x - 2)^2 (y - 1)
  FieldPoly p = monomials_at_one(
      K, p_(K, "4*y - 4 - 4*x*y + 4*x + x^2*y - x^2", {"x", "y"}));
  auto fm = factor_multiplicity(K, p, 0, K.from_int(2));
  CHECK(fm.multiplicity == 2);
  FieldPoly quotient_expected = monomials_at_one(K, p_(K, "y - 1", {"x", "y"}));
  CHECK(fm.quotient == quotient_expected);

  // not a root: multiplicity 0, quotient is the input
  auto none = factor_multiplicity(K, p, 0, K.from_int(5));
  CHECK(none.multiplicity == 0);
  CHECK(none.quotient == p);

  // along y: single factor
  auto along_y = factor_multiplicity(K, p, 1, K.one());
  CHECK(along_y.multiplicity == 1);

  FieldPoly zero;
  zero.n = 2;
  CHECK_THROWS_AS(factor_multiplicity(K, zero, 0, K.one()), DomainError);
}

TEST_CASE("factor reconstruction on random instances") {
  Field K;
  Rng rng(20260814);
  for (int i = 0; i < 40; ++i) {
    // plant (x_j - c)^k * q and recover k by division
    int n = rng.range(1, 2);
    int j = rng.below(n);
    int k = rng.range(1, 3);
    FieldElement c = K.from_rational(rng.nonzero_rational(3, 2));

    FieldPoly base;
    base.n = n;
    Multidegree unit(n, 0);
    unit[j] = 1;
    add_term(K, base, unit, K.one());
    add_term(K, base, Multidegree(n, 0), K.neg(c));

    FieldPoly q;  // random polynomial with (x_j - c) not a factor: constant + x_j
    q.n = n;
    add_term(K, q, Multidegree(n, 0), K.from_rational(rng.nonzero_rational(4, 2)));
    if (rng.chance(50)) add_term(K, q, unit, K.one());
    if (evaluate(K, partial_substitute(K, q, j, c), std::vector<FieldElement>(n - 1, K.one())) ==
        K.zero())
      continue;

    FieldPoly planted = q;
    for (int m = 0; m < k; ++m) planted = mul(K, planted, base);
    auto fm = factor_multiplicity(K, planted, j, c);
    CHECK(fm.multiplicity == k);
    CHECK(fm.quotient == q);
  }
}

TEST_CASE("rendering and display order") {
  Field K;
  FieldPoly init =
      initial_form(testsupport::sample_curve(K).poly, {Rational(1), Rational(0)});
  CHECK(to_string(K, init, {"x", "y"}) == "-3 + 3*x - y + x*y");

  auto parsed = testsupport::sample_curve(K);
  std::string rendered = to_string(K, parsed.poly, parsed.variables);
  CHECK(rendered ==
        "-3*t^2 + 3*t*x - t^2*y + t*x*y + (t^4 + t^5)*y^4 + x^5 - t^3*x*y^4");
}

TEST_CASE("parse-render round trip on random polynomials") {
  Field K;
  Rng rng(20260815);
  std::vector<std::string> names{"x", "y", "z"};
  for (int i = 0; i < 60; ++i) {
    int n = rng.range(1, 3);
    SeriesPoly f = testsupport::random_poly(K, rng, n, 4, 3);
    std::vector<std::string> vars(names.begin(), names.begin() + n);
    CHECK(parse_polynomial(K, to_string(K, f, vars), vars).poly == f);
  }
}

}  // TEST_SUITE
