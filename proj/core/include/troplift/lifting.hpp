#pragma once

// Lifting a point of the tropical hypersurface to an actual Puiseux-series
// root with prescribed coordinate orders b and principal coefficients gamma.
// The multivariate driver fixes one coordinate per step -- trivially when it
// is absent from the initial form, by direct substitution when some
// coordinate slice of the initial form survives, and by a small controlled
// perturbation of the first coordinate when every slice vanishes -- and the
// univariate base case runs the classical polygon iteration.

#include <optional>
#include <vector>

#include "troplift/polynomial.hpp"
#include "troplift/series.hpp"
#include "troplift/tropical.hpp"

namespace troplift {

struct LiftRequest {
  SeriesPoly poly;
  std::vector<Rational> orders;        // prescribed coordinate orders b
  std::vector<FieldElement> leading;   // prescribed principal coefficients
  Rational precision;                  // truncation target, > max(orders)
};

struct LiftedPoint {
  std::vector<PuiseuxSeries> coords;
  bool exact = false;  // substitution yields the exact zero series
};

struct LiftOptions {
  int step_cap = 1000;   // univariate substitutions per branch
  int branch_cap = 16;   // branches reported by enumeration
};

// One move of the multivariate driver, recorded for introspection.
struct LiftStep {
  enum class Kind {
    TrivialRoot,            // substituting gamma_j t^{b_j} already gives exact zero
    ZeroPolynomial,         // recursion reached the zero polynomial
    AbsentVariable,         // coordinate missing from the initial form
    SliceSubstitution,      // some slice of the initial form survives
    PerturbedSubstitution,  // all slices vanish: first coordinate perturbed
    UnivariateBase,
  };

  Kind kind;
  int variable = -1;              // original coordinate index fixed here
  int multiplicity = 0;           // PerturbedSubstitution: linear-factor multiplicity
  std::optional<Rational> gap;    // PerturbedSubstitution: t-support gap (nullopt: none, 1 used)
  SeriesPoly remaining;           // polynomial the recursion continued on
  int univariate_steps = 0;       // UnivariateBase: substitutions performed
};

struct LiftOutcome {
  LiftedPoint point;
  std::vector<LiftStep> trace;
};

struct UnivariateBranch {
  PuiseuxSeries root;
  bool exact = false;
  int steps = 0;
};

// Root of a univariate f with order r and principal coefficient gamma,
// following the canonical branch: at every continuation the lexicographically
// smallest (candidate order, root) pair, skipping candidates whose initial
// polynomial has no backend root. Stops with an exact root or truncates at
// precision. HypothesisViolated unless r is a polygon candidate and gamma a
// nonzero root of the matching initial form.
UnivariateBranch univariate_lift(const Field& K, const SeriesPoly& f, const Rational& r,
                                 const FieldElement& gamma, const Rational& precision,
                                 const LiftOptions& opts = LiftOptions{});

// All continuation branches, depth-first in canonical order, at most
// opts.branch_cap of them. Branches dying in NoRootInBackend are dropped;
// if none survives the first death is rethrown.
std::vector<UnivariateBranch> univariate_lift_branches(const Field& K, const SeriesPoly& f,
                                                       const Rational& r,
                                                       const FieldElement& gamma,
                                                       const Rational& precision,
                                                       const LiftOptions& opts = LiftOptions{});

// Full recursive lift. Validates the hypotheses (tropical membership and
// vanishing of the initial form at `leading`) at every recursion level.
LiftOutcome multivariate_lift(const Field& K, const LiftRequest& request,
                              const LiftOptions& opts = LiftOptions{});

struct ResidualOrder {
  enum class Kind { Exact, AtLeast, Infinite };
  Kind kind = Kind::Infinite;
  Rational value;  // meaningful for Exact and AtLeast

  static ResidualOrder exact_order(Rational v) { return {Kind::Exact, std::move(v)}; }
  static ResidualOrder at_least(Rational v) { return {Kind::AtLeast, std::move(v)}; }
  static ResidualOrder infinite() { return {Kind::Infinite, Rational(0)}; }
};

bool operator==(const ResidualOrder& a, const ResidualOrder& b);

// Order of f evaluated at the point: an exact order, +infinity for the exact
// zero, or a certified lower bound when the residual is an empty truncated
// series. With require_determinate, the lower-bound case throws
// IndeterminatePrecision instead.
ResidualOrder verify_root(const Field& K, const SeriesPoly& f,
                          const std::vector<PuiseuxSeries>& point,
                          bool require_determinate = false);

}  // namespace troplift
