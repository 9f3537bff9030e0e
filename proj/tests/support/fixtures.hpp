#pragma once

// The worked sample curve shared by the golden tests: a plane curve over
// Puiseux-series coefficients whose lift at b = (1, 0), gamma = (1, -3) takes
// the perturbed-substitution path and ends in an exact root.

#include <vector>

#include "troplift/field.hpp"
#include "troplift/parse.hpp"
#include "troplift/polynomial.hpp"
#include "troplift/series.hpp"

namespace troplift::testsupport {

inline const char* kSampleCurveText =
    "-3*t^2 + 3*t*x - t^2*y + t*x*y - t^3*x*y^4 + (t^4+t^5)*y^4 + x^5";

inline ParsedPolynomial sample_curve(const Field& K) {
  return parse_polynomial(K, kSampleCurveText);
}

// The one-variable polynomial left after the first lift step substitutes
// x = t + t^2.
inline SeriesPoly sample_curve_after_first_step(const Field& K) {
  return parse_polynomial(
             K, "3*t^3 + t^5 + 5*t^6 + 10*t^7 + 10*t^8 + 5*t^9 + t^10 + t^3*y")
      .poly;
}

inline PuiseuxSeries sample_lifted_x(const Field& K) { return parse_series(K, "t + t^2"); }

inline PuiseuxSeries sample_lifted_y(const Field& K) {
  return parse_series(K, "-3 - t^2 - 5*t^3 - 10*t^4 - 10*t^5 - 5*t^6 - t^7");
}

}  // namespace troplift::testsupport
