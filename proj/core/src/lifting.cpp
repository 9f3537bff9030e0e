#include "troplift/lifting.hpp"

#include <algorithm>
#include <string>

#include "troplift/errors.hpp"

namespace troplift {

bool operator==(const ResidualOrder& a, const ResidualOrder& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == ResidualOrder::Kind::Infinite) return true;
  return a.value == b.value;
}

namespace {

// ---- univariate polygon iteration ------------------------------------------

// Substitution x -> t^shift * (gamma + x'), expanded binomially:
// the new coefficient of x'^m collects C(d, m) gamma^{d-m} t^{shift*d} a_d.
SeriesPoly polygon_step(const Field& K, const SeriesPoly& h, const Rational& shift,
                        const FieldElement& gamma) {
  unsigned top = h.terms.rbegin()->first[0];
  std::vector<FieldElement> gpow(top + 1, K.one());
  for (unsigned d = 1; d <= top; ++d) gpow[d] = K.mul(gpow[d - 1], gamma);

  SeriesPoly out;
  out.n = 1;
  for (const auto& [i, a] : h.terms) {
    unsigned d = i[0];
    PuiseuxSeries scaled = troplift::shift(a, shift * Rational(d));
    Int binom = 1;
    for (unsigned m = 0; m <= d; ++m) {
      if (m > 0) binom = binom * (d - m + 1) / m;
      FieldElement factor = K.mul(K.from_integer(binom), gpow[d - m]);
      add_term(K, out, Multidegree{m}, scale(K, scaled, factor));
    }
  }
  return out;
}

struct StepChoice {
  Rational rel_order;
  FieldElement root;
};

// Admissible continuations of h: strictly positive polygon candidates paired
// with the nonzero backend roots of their initial polynomials, in canonical
// (candidate, root) order. positive_candidates reports whether any positive
// candidate existed at all, to separate "stuck" from "no backend root".
std::vector<StepChoice> continuation_choices(const Field& K, const SeriesPoly& h,
                                             bool& positive_candidates) {
  std::vector<StepChoice> out;
  positive_candidates = false;
  for (const Rational& r : newton_polygon_candidates(h)) {
    if (r <= 0) continue;
    positive_candidates = true;
    FieldPoly init = initial_form(h, {r});
    unsigned low = init.terms.begin()->first[0];
    FieldPoly reduced;  // divide out x^low so zero is not a root
    reduced.n = 1;
    for (const auto& [i, c] : init.terms) reduced.terms.emplace(Multidegree{i[0] - low}, c);
    std::vector<FieldElement> roots = roots_univariate(K, reduced);
    std::vector<FieldElement> distinct;
    for (const auto& g : roots) {
      if (K.is_zero(g)) continue;  // numerically spurious; exact zero cannot occur
      if (!distinct.empty() && K.eq(distinct.back(), g)) continue;
      distinct.push_back(g);
    }
    for (const auto& g : distinct) out.push_back({r, g});
  }
  return out;
}

void validate_univariate(const Field& K, const SeriesPoly& f, const Rational& r,
                         const FieldElement& gamma, const Rational& precision) {
  if (f.n != 1) throw DomainError("univariate lift needs a univariate polynomial");
  if (f.is_zero()) throw DomainError("univariate lift of the zero polynomial");
  if (!(precision > r)) throw DomainError("precision must exceed the prescribed order");
  if (K.is_zero(gamma))
    throw HypothesisViolated("prescribed principal coefficient is zero");
  auto candidates = newton_polygon_candidates(f);
  if (std::find(candidates.begin(), candidates.end(), r) == candidates.end())
    throw HypothesisViolated("prescribed order " + to_string(r) +
                             " is not a polygon candidate");
  FieldPoly init = initial_form(f, {r});
  if (!K.is_zero(evaluate(K, init, {gamma})))
    throw HypothesisViolated("initial form does not vanish at the prescribed coefficient");
}

struct PolygonState {
  SeriesPoly h;       // current polynomial in the residual variable
  Rational base;      // absolute exponent of the last attached term
  PuiseuxSeries acc;  // root terms found so far (exact)
  int steps = 0;
};

PolygonState advance(const Field& K, PolygonState state, const Rational& rel,
                     const FieldElement& gamma, const LiftOptions& opts) {
  state.h = polygon_step(K, state.h, rel, gamma);
  state.base += rel;
  state.acc.terms.emplace_back(state.base, gamma);
  if (++state.steps > opts.step_cap)
    throw NonConvergence("univariate lift exceeded the step cap");
  return state;
}

bool residual_vanishes(const PolygonState& state) {
  return state.h.terms.find(Multidegree{0}) == state.h.terms.end();
}

UnivariateBranch finish_exact(const PolygonState& state) {
  return {state.acc, true, state.steps};
}

UnivariateBranch finish_truncated(const PolygonState& state, const Rational& precision) {
  return {truncate(state.acc, precision), false, state.steps};
}

}  // namespace

UnivariateBranch univariate_lift(const Field& K, const SeriesPoly& f, const Rational& r,
                                 const FieldElement& gamma, const Rational& precision,
                                 const LiftOptions& opts) {
  validate_univariate(K, f, r, gamma, precision);
  PolygonState state{f, Rational(0), PuiseuxSeries{}, 0};
  state = advance(K, state, r, gamma, opts);
  for (;;) {
    if (residual_vanishes(state)) return finish_exact(state);
    bool positive = false;
    auto choices = continuation_choices(K, state.h, positive);
    if (choices.empty()) {
      if (!positive)
        throw NonConvergence("no continuation of positive order; residual does not vanish");
      throw NoRootInBackend("backend has no root of any continuation initial polynomial");
    }
    const StepChoice& next = choices.front();
    if (state.base + next.rel_order >= precision) return finish_truncated(state, precision);
    state = advance(K, state, next.rel_order, next.root, opts);
  }
}

std::vector<UnivariateBranch> univariate_lift_branches(const Field& K, const SeriesPoly& f,
                                                       const Rational& r,
                                                       const FieldElement& gamma,
                                                       const Rational& precision,
                                                       const LiftOptions& opts) {
  validate_univariate(K, f, r, gamma, precision);
  std::vector<UnivariateBranch> results;
  bool any_dead = false;
  std::string first_death;

  auto explore = [&](auto&& self, const PolygonState& state) -> void {
    if (static_cast<int>(results.size()) >= opts.branch_cap) return;
    if (residual_vanishes(state)) {
      results.push_back(finish_exact(state));
      return;
    }
    bool positive = false;
    auto choices = continuation_choices(K, state.h, positive);
    if (choices.empty()) {
      any_dead = true;
      if (first_death.empty())
        first_death = positive ? "backend has no root of any continuation initial polynomial"
                               : "no continuation of positive order";
      return;
    }
    bool truncated_emitted = false;  // identical outputs: every over-budget choice truncates alike
    for (const auto& choice : choices) {
      if (static_cast<int>(results.size()) >= opts.branch_cap) return;
      if (state.base + choice.rel_order >= precision) {
        if (!truncated_emitted) {
          results.push_back(finish_truncated(state, precision));
          truncated_emitted = true;
        }
        continue;
      }
      self(self, advance(K, state, choice.rel_order, choice.root, opts));
    }
  };

  PolygonState start{f, Rational(0), PuiseuxSeries{}, 0};
  explore(explore, advance(K, start, r, gamma, opts));
  if (results.empty()) {
    if (any_dead) throw NoRootInBackend(first_death);
    throw NonConvergence("no lifting branch completed");
  }
  return results;
}

// ---- multivariate driver ----------------------------------------------------

namespace {

struct Level {
  SeriesPoly f;
  std::vector<Rational> orders;
  std::vector<FieldElement> leading;
  std::vector<int> original;  // original coordinate index per local slot
};

PuiseuxSeries pinned_coordinate(const Field& K, const Rational& order_j,
                                const FieldElement& gamma_j) {
  return series_term(K, order_j, gamma_j);
}

Level drop_slot(const Field& K, const Level& lvl, int j, const PuiseuxSeries& value) {
  Level next;
  next.f = substitute_coordinate(K, lvl.f, j, value);
  for (std::size_t k = 0; k < lvl.orders.size(); ++k) {
    if (static_cast<int>(k) == j) continue;
    next.orders.push_back(lvl.orders[k]);
    next.leading.push_back(lvl.leading[k]);
    next.original.push_back(lvl.original[k]);
  }
  return next;
}

void lift_level(const Field& K, const Level& lvl, const Rational& precision,
                const LiftOptions& opts, int depth, LiftOutcome& out) {
  const int m = lvl.f.n;

  auto pin_all = [&](LiftStep::Kind kind) {
    for (int j = 0; j < m; ++j)
      out.point.coords[lvl.original[j]] = pinned_coordinate(K, lvl.orders[j], lvl.leading[j]);
    LiftStep step;
    step.kind = kind;
    out.trace.push_back(std::move(step));
  };

  if (lvl.f.is_zero()) {
    // Everything remaining solves the zero polynomial; pin the prescribed data.
    pin_all(LiftStep::Kind::ZeroPolynomial);
    return;
  }

  // The hypotheses are re-established by every substitution below, so a
  // failure past depth 0 is an internal inconsistency, not user error.
  TropicalPoly trop = tropicalize(lvl.f);
  if (!is_member(trop, lvl.orders))
    throw HypothesisViolated("prescribed orders are not on the tropical hypersurface (depth " +
                             std::to_string(depth) + ")");
  FieldPoly init = initial_form(lvl.f, lvl.orders);
  if (!K.is_zero(evaluate(K, init, lvl.leading)))
    throw HypothesisViolated(
        "initial form does not vanish at the prescribed coefficients (depth " +
        std::to_string(depth) + ")");

  std::vector<PuiseuxSeries> pins;
  pins.reserve(m);
  for (int j = 0; j < m; ++j)
    pins.push_back(pinned_coordinate(K, lvl.orders[j], lvl.leading[j]));
  if (evaluate(K, lvl.f, pins).is_exact_zero()) {
    pin_all(LiftStep::Kind::TrivialRoot);
    return;
  }

  if (m == 1) {
    UnivariateBranch branch =
        univariate_lift(K, lvl.f, lvl.orders[0], lvl.leading[0], precision, opts);
    out.point.coords[lvl.original[0]] = branch.root;
    out.point.exact = out.point.exact && branch.exact;
    LiftStep step;
    step.kind = LiftStep::Kind::UnivariateBase;
    step.variable = lvl.original[0];
    step.univariate_steps = branch.steps;
    out.trace.push_back(std::move(step));
    return;
  }

  auto descend = [&](int j, const PuiseuxSeries& value, LiftStep step) {
    Level next = drop_slot(K, lvl, j, value);
    step.variable = lvl.original[j];
    step.remaining = next.f;
    out.point.coords[lvl.original[j]] = value;
    out.trace.push_back(std::move(step));
    lift_level(K, next, precision, opts, depth + 1, out);
  };

  // A coordinate absent from the initial form can be pinned outright.
  for (int j = 0; j < m; ++j) {
    bool absent = true;
    for (const auto& [i, c] : init.terms)
      if (i[j] != 0) {
        absent = false;
        break;
      }
    if (absent) {
      LiftStep step;
      step.kind = LiftStep::Kind::AbsentVariable;
      descend(j, pins[j], std::move(step));
      return;
    }
  }

  // A surviving coordinate slice of the initial form keeps the hypotheses
  // intact under direct substitution.
  for (int j = 0; j < m; ++j) {
    if (!partial_substitute(K, init, j, lvl.leading[j]).is_zero()) {
      LiftStep step;
      step.kind = LiftStep::Kind::SliceSubstitution;
      descend(j, pins[j], std::move(step));
      return;
    }
  }

  // Every slice vanishes: perturb the first coordinate just below half the
  // t-support gap per linear-factor multiplicity, which keeps the remaining
  // hypotheses valid while making the slice survive.
  FactorMultiplicity fm = factor_multiplicity(K, init, 0, lvl.leading[0]);
  std::optional<Rational> gap = epsilon_gap(lvl.f, lvl.orders);
  Rational eps = gap ? *gap : Rational(1);
  Rational bump = lvl.orders[0] + eps / Rational(2 * fm.multiplicity);
  PuiseuxSeries value = add(K, pins[0], series_term(K, bump, K.one()));
  LiftStep step;
  step.kind = LiftStep::Kind::PerturbedSubstitution;
  step.multiplicity = fm.multiplicity;
  step.gap = gap;
  descend(0, value, std::move(step));
}

}  // namespace

LiftOutcome multivariate_lift(const Field& K, const LiftRequest& request,
                              const LiftOptions& opts) {
  const std::size_t n = request.orders.size();
  if (static_cast<std::size_t>(request.poly.n) != n || request.leading.size() != n)
    throw DomainError("lift request: arity mismatch");
  if (request.poly.is_zero()) throw DomainError("lift request: zero polynomial");
  for (const auto& g : request.leading)
    if (K.is_zero(g)) throw HypothesisViolated("prescribed principal coefficient is zero");
  for (const auto& b : request.orders)
    if (!(request.precision > b))
      throw DomainError("precision must exceed every prescribed order");

  LiftOutcome out;
  out.point.coords.assign(n, series_zero());
  out.point.exact = true;

  Level top{request.poly, request.orders, request.leading, {}};
  top.original.resize(n);
  for (std::size_t j = 0; j < n; ++j) top.original[j] = static_cast<int>(j);
  lift_level(K, top, request.precision, opts, 0, out);
  return out;
}

ResidualOrder verify_root(const Field& K, const SeriesPoly& f,
                          const std::vector<PuiseuxSeries>& point,
                          bool require_determinate) {
  if (static_cast<std::size_t>(f.n) != point.size())
    throw DomainError("verify_root: arity mismatch");
  PuiseuxSeries residual = evaluate(K, f, point);
  if (!residual.terms.empty())
    return ResidualOrder::exact_order(residual.terms.front().first);
  if (residual.exact()) return ResidualOrder::infinite();
  if (require_determinate)
    throw IndeterminatePrecision("residual order is only bounded below by " +
                                 to_string(*residual.truncation));
  return ResidualOrder::at_least(*residual.truncation);
}

}  // namespace troplift
