#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "troplift/errors.hpp"
#include "troplift/parse.hpp"
#include "troplift/series.hpp"

using namespace troplift;
using testsupport::Rng;

namespace {

PuiseuxSeries s_(const Field& K, const char* text) { return parse_series(K, text); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("order and principal coefficient") {
  Field K;
  CHECK(order(s_(K, "3*t^3 + t^5")) == Rational(3));
  CHECK(order(s_(K, "t^(-1) + 1")) == Rational(-1));
  CHECK_FALSE(order(series_zero()).has_value());  // +infinity
  CHECK(principal_coefficient(s_(K, "t + t^2")) == K.one());
  CHECK(principal_coefficient(s_(K, "-3 - t^2 - 5*t^3")) == K.from_int(-3));
  CHECK(principal_coefficient(s_(K, "5*t^(1/2)")) == K.from_int(5));
  CHECK_THROWS_AS(principal_coefficient(series_zero()), DomainError);

  PuiseuxSeries unknown;  // O(t^2): no term is known, order is indeterminate
  unknown.truncation = Rational(2);
  CHECK_THROWS_AS(order(unknown), IndeterminatePrecision);
  CHECK(order_lower_bound(unknown) == Rational(2));
  CHECK_FALSE(order_lower_bound(series_zero()).has_value());
  CHECK(order_lower_bound(s_(K, "t^3")) == Rational(3));
}

TEST_CASE("arithmetic goldens") {
  Field K;
  CHECK(mul(K, s_(K, "t"), s_(K, "t + t^2")) == s_(K, "t^2 + t^3"));
  CHECK(add(K, s_(K, "-3*t^2"), s_(K, "3*t^2")).is_exact_zero());
  CHECK(pow(K, s_(K, "t + t^2"), 5) ==
        s_(K, "t^5 + 5*t^6 + 10*t^7 + 10*t^8 + 5*t^9 + t^10"));
  CHECK(pow(K, s_(K, "t + t^2"), 0) == series_constant(K, K.one()));
  CHECK(pow(K, s_(K, "t^(1/2)"), 2) == s_(K, "t"));
  CHECK(shift(s_(K, "1 + t"), Rational(1, 2)) == s_(K, "t^(1/2) + t^(3/2)"));
  CHECK(scale(K, s_(K, "t"), K.zero()).is_exact_zero());
}

TEST_CASE("truncation propagation") {
  Field K;
  PuiseuxSeries a = s_(K, "1");
  a.truncation = Rational(2);  // 1 + O(t^2)
  PuiseuxSeries b = s_(K, "-1 + t");

  PuiseuxSeries sum = add(K, a, b);
  REQUIRE(sum.terms.size() == 1);
  CHECK(sum.terms[0].first == Rational(1));
  CHECK(sum.truncation == Rational(2));  // t + O(t^2)

  // order(a) + T(b) against order(b) + T(a): 0 + inf vs 3 + 2
  PuiseuxSeries prod = mul(K, a, s_(K, "t^3"));
  REQUIRE(prod.terms.size() == 1);
  CHECK(prod.terms[0].first == Rational(3));
  CHECK(prod.truncation == Rational(5));

  CHECK(mul(K, series_zero(), a).is_exact_zero());  // exact zero absorbs
  CHECK(mul(K, s_(K, "t"), s_(K, "t^2")).exact());
}

TEST_CASE("truncate") {
  Field K;
  PuiseuxSeries s = truncate(s_(K, "3 + t + t^9"), Rational(5));
  PuiseuxSeries expected = s_(K, "3 + t");
  expected.truncation = Rational(5);
  CHECK(s == expected);

  PuiseuxSeries z = truncate(series_zero(), Rational(5));
  CHECK(z.terms.empty());
  CHECK(z.truncation == Rational(5));  // knowledge below t^5 only
  CHECK_FALSE(z.is_exact_zero());

  PuiseuxSeries high = truncate(s_(K, "t^7"), Rational(5));
  CHECK(high.terms.empty());
  CHECK(high.truncation == Rational(5));

  // tightening an already truncated series keeps the smaller bound
  CHECK(truncate(truncate(s_(K, "1 + t"), Rational(3)), Rational(7)).truncation == Rational(3));

  // order survives truncation whenever it is below the cut
  CHECK(order(truncate(s_(K, "t^2 + t^4"), Rational(3))) == Rational(2));
}

TEST_CASE("valuation homomorphism on random exact series") {
  Field K;
  Rng rng(20260802);
  for (int i = 0; i < 200; ++i) {
    PuiseuxSeries a = testsupport::random_exact_series(K, rng, rng.range(1, 4), -2, 4, 3);
    PuiseuxSeries b = testsupport::random_exact_series(K, rng, rng.range(1, 4), -2, 4, 3);
    PuiseuxSeries ab = mul(K, a, b);
    CHECK(*order(ab) == *order(a) + *order(b));
    CHECK(principal_coefficient(ab) ==
          K.mul(principal_coefficient(a), principal_coefficient(b)));

    PuiseuxSeries s = add(K, a, b);
    if (!s.is_exact_zero()) {
      CHECK(*order(s) >= std::min(*order(a), *order(b)));
      if (*order(a) != *order(b)) CHECK(*order(s) == std::min(*order(a), *order(b)));
    }
  }
}

TEST_CASE("ring axioms on random exact series") {
  Field K;
  Rng rng(20260803);
  for (int i = 0; i < 100; ++i) {
    PuiseuxSeries a = testsupport::random_exact_series(K, rng, rng.range(1, 3), -2, 3, 2);
    PuiseuxSeries b = testsupport::random_exact_series(K, rng, rng.range(1, 3), -2, 3, 2);
    PuiseuxSeries c = testsupport::random_exact_series(K, rng, rng.range(1, 3), -2, 3, 2);
    CHECK(mul(K, a, b) == mul(K, b, a));
    CHECK(mul(K, a, add(K, b, c)) == add(K, mul(K, a, b), mul(K, a, c)));
    CHECK(mul(K, mul(K, a, b), c) == mul(K, a, mul(K, b, c)));
    CHECK(mul(K, a, b) == testsupport::naive_mul(K, a, b));
    CHECK(sub(K, a, a).is_exact_zero());
  }
}

TEST_CASE("rendering") {
  Field K;
  CHECK(to_string(K, series_zero()) == "0");
  CHECK(to_string(K, s_(K, "t")) == "t");
  CHECK(to_string(K, s_(K, "-t^(1/2)")) == "-t^(1/2)");
  CHECK(to_string(K, s_(K, "1 - t")) == "1 - t");
  CHECK(to_string(K, s_(K, "t^(-2) + 3*t")) == "t^(-2) + 3*t");
  CHECK(to_string(K, s_(K, "-3 - t^2")) == "-3 - t^2");
  CHECK(to_string(K, s_(K, "1/2*t^(3/2)")) == "1/2*t^(3/2)");

  PuiseuxSeries trunc = truncate(s_(K, "3 + t"), Rational(2));
  CHECK(to_string(K, trunc) == "3 + t + O(t^2)");
  PuiseuxSeries empty = truncate(series_zero(), Rational(1, 2));
  CHECK(to_string(K, empty) == "O(t^(1/2))");
}

TEST_CASE("parse-render round trip on random series") {
  Field K;
  Rng rng(20260804);
  for (int i = 0; i < 100; ++i) {
    PuiseuxSeries s = testsupport::random_exact_series(K, rng, rng.range(1, 5), -3, 6, 4);
    CHECK(parse_series(K, to_string(K, s)) == s);
  }
}

}  // TEST_SUITE
