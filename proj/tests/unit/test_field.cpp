#include <doctest.h>

#include <complex>
#include <utility>

#include "generators.hpp"
#include "troplift/errors.hpp"
#include "troplift/field.hpp"

using namespace troplift;
using testsupport::Rng;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic is exact") {
  Field K;
  FieldElement a = K.from_rational(Rational(1, 3));
  FieldElement b = K.from_rational(Rational(1, 6));
  CHECK(K.add(a, b) == K.from_rational(Rational(1, 2)));
  CHECK(K.sub(a, b) == K.from_rational(Rational(1, 6)));
  CHECK(K.mul(a, b) == K.from_rational(Rational(1, 18)));
  CHECK(K.inv(a) == K.from_int(3));
  CHECK(K.pow(a, 3) == K.from_rational(Rational(1, 27)));
  CHECK(K.pow(a, 0) == K.one());
  CHECK(K.neg(K.zero()) == K.zero());
  CHECK(K.from_integer(Int(-7)) == K.from_int(-7));
}

TEST_CASE("rational zero and equality have no tolerance") {
  Field K;
  CHECK(K.is_zero(K.sub(K.one(), K.one())));
  CHECK_FALSE(K.is_zero(K.from_rational(Rational(1, 1000000000000LL))));
  CHECK(K.eq(K.from_rational(Rational(2, 4)), K.from_rational(Rational(1, 2))));
}

TEST_CASE("field axioms hold on random rationals") {
  Field K;
  Rng rng(20260801);
  for (int i = 0; i < 200; ++i) {
    FieldElement a = K.from_rational(rng.nonzero_rational(9, 7));
    FieldElement b = K.from_rational(rng.nonzero_rational(9, 7));
    FieldElement c = K.from_rational(rng.nonzero_rational(9, 7));
    CHECK(K.add(a, b) == K.add(b, a));
    CHECK(K.mul(K.add(a, b), c) == K.add(K.mul(a, c), K.mul(b, c)));
    CHECK(K.mul(a, K.mul(b, c)) == K.mul(K.mul(a, b), c));
    CHECK(K.mul(a, K.inv(a)) == K.one());
    CHECK(K.is_zero(K.add(a, K.neg(a))));
  }
}

TEST_CASE("inversion of zero is rejected") {
  Field K;
  CHECK_THROWS_AS(K.inv(K.zero()), DomainError);
}

TEST_CASE("mixed backends are rejected") {
  Field K;
  FieldElement stray = FieldElement::of(std::complex<double>(1, 0));
  CHECK_THROWS_AS(K.add(K.one(), stray), DomainError);
  Field C(Backend::Complex);
  CHECK_THROWS_AS(C.mul(C.one(), FieldElement::of(Rational(1))), DomainError);
}

TEST_CASE("complex zero test uses the configured tolerance") {
  Field C(Backend::Complex);
  CHECK(C.is_zero(C.from_complex({1e-12, 0})));
  CHECK_FALSE(C.is_zero(C.from_complex({1e-8, 0})));
  CHECK(C.eq(C.from_complex({1.0, 2.0}), C.from_complex({1.0, 2.0 + 1e-12})));
}

TEST_CASE("tolerance configuration is validated") {
  ToleranceConfig bad;
  bad.zero_tolerance = 0;
  CHECK_THROWS_AS(Field(Backend::Complex, bad), DomainError);
  ToleranceConfig cap;
  cap.iteration_cap = 0;
  CHECK_THROWS_AS(Field(Backend::Complex, cap), DomainError);
}

TEST_CASE("rendering") {
  Field K;
  CHECK(K.to_string(K.from_rational(Rational(-3, 4))) == "-3/4");
  CHECK(K.to_string(K.from_int(7)) == "7");
  Field C(Backend::Complex);
  CHECK(C.to_string(C.from_complex({0, 1})) == "i");
  CHECK(C.to_string(C.from_complex({0, -1})) == "-i");
  CHECK(C.to_string(C.from_complex({1, 2})) == "1+2i");
  CHECK(C.to_string(C.from_complex({1.5, -1})) == "1.5-i");
  CHECK(C.to_string(C.from_complex({2, 0})) == "2");
}

TEST_CASE("element literals") {
  Field K;
  CHECK(field_element_from_string(K, "3/4") == K.from_rational(Rational(3, 4)));
  CHECK(field_element_from_string(K, "-2") == K.from_int(-2));
  CHECK(field_element_from_string(K, "0.25") == K.from_rational(Rational(1, 4)));
  CHECK_THROWS_AS(field_element_from_string(K, "1+2i"), ParseError);

  Field C(Backend::Complex);
  CHECK(field_element_from_string(C, "1+2i") == C.from_complex({1, 2}));
  CHECK(field_element_from_string(C, "-i") == C.from_complex({0, -1}));
  CHECK(field_element_from_string(C, "2i") == C.from_complex({0, 2}));
  CHECK(field_element_from_string(C, "3") == C.from_complex({3, 0}));
  CHECK(field_element_from_string(C, "0.5-0.5i") == C.from_complex({0.5, -0.5}));
}

TEST_CASE("rational roots with multiplicity") {
  Field K;
  auto e = [&](long v) { return K.from_int(v); };

  // y^2 - 1
  auto r = K.roots_univariate({e(-1), e(0), e(1)});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == e(-1));
  CHECK(r[1] == e(1));

  // (2y - 1)^2 = 4y^2 - 4y + 1: double root 1/2
  r = K.roots_univariate({e(1), e(-4), e(4)});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == K.from_rational(Rational(1, 2)));
  CHECK(r[1] == K.from_rational(Rational(1, 2)));

  // y^2 - 2 has no rational root: the backend returns a partial (empty) set
  CHECK(K.roots_univariate({e(-2), e(0), e(1)}).empty());

  // y^3 - y: low factor contributes the zero root
  r = K.roots_univariate({e(0), e(-1), e(0), e(1)});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == e(-1));
  CHECK(r[1] == e(0));
  CHECK(r[2] == e(1));

  // 6y^2 - 5y + 1 = (2y-1)(3y-1): fractional roots
  r = K.roots_univariate({e(1), e(-5), e(6)});
  REQUIRE(r.size() == 2);
  CHECK(r[0] == K.from_rational(Rational(1, 3)));
  CHECK(r[1] == K.from_rational(Rational(1, 2)));
}

TEST_CASE("root finding input validation") {
  Field K;
  CHECK_THROWS_AS(K.roots_univariate({}), DomainError);
  CHECK_THROWS_AS(K.roots_univariate({K.zero()}), DomainError);
  CHECK_THROWS_AS(K.roots_univariate({K.one()}), DomainError);
  CHECK_THROWS_AS(K.roots_univariate({K.one(), K.zero()}), DomainError);
}

TEST_CASE("complex roots of y^4 + 1 meet the residual bound") {
  Field C(Backend::Complex);
  std::vector<FieldElement> coeffs{C.one(), C.zero(), C.zero(), C.zero(), C.one()};
  auto roots = C.roots_univariate(coeffs);
  REQUIRE(roots.size() == 4);
  for (const auto& root : roots) {
    std::complex<double> z = root.cx();
    CHECK(std::abs(z * z * z * z + 1.0) <= 1e-8);
  }
  // canonical order: by (re, im)
  for (std::size_t k = 1; k < roots.size(); ++k) CHECK(roots[k - 1] < roots[k]);
}

TEST_CASE("complex roots of y^2 + 1") {
  // the real parts are noise around zero, so the canonical (re, im) order
  // between the conjugates is not pinned down; match by imaginary sign
  Field C(Backend::Complex);
  auto roots = C.roots_univariate({C.one(), C.zero(), C.one()});
  REQUIRE(roots.size() == 2);
  std::complex<double> lo = roots[0].cx(), hi = roots[1].cx();
  if (lo.imag() > hi.imag()) std::swap(lo, hi);
  CHECK(std::abs(lo - std::complex<double>(0, -1)) < 1e-8);
  CHECK(std::abs(hi - std::complex<double>(0, 1)) < 1e-8);
}

}  // TEST_SUITE
