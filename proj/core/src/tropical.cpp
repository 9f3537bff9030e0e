#include "troplift/tropical.hpp"

#include <algorithm>
#include <set>

#include "troplift/errors.hpp"

namespace troplift {

namespace {

Rational inner(const Multidegree& i, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t k = 0; k < b.size(); ++k) acc += Rational(i[k]) * b[k];
  return acc;
}

}  // namespace

TropicalPoly tropicalize(const SeriesPoly& f) {
  if (f.is_zero()) throw DomainError("tropicalization of the zero polynomial");
  TropicalPoly out;
  out.n = f.n;
  for (const auto& [i, c] : f.terms) {
    auto o = order(c);  // throws IndeterminatePrecision on an empty truncated coefficient
    out.terms.emplace_back(i, *o);  // stored coefficients are never exact zero
  }
  return out;
}

TropEvalResult trop_eval(const TropicalPoly& T, const std::vector<Rational>& b) {
  if (static_cast<std::size_t>(T.n) != b.size())
    throw DomainError("tropical evaluation: arity mismatch");
  TropEvalResult out;
  bool first = true;
  for (const auto& [i, a] : T.terms) {
    Rational v = a + inner(i, b);
    if (first || v < out.value) {
      out.value = v;
      out.argmin.clear();
      first = false;
    }
    if (v == out.value) out.argmin.push_back(i);
  }
  return out;
}

bool is_member(const TropicalPoly& T, const std::vector<Rational>& b) {
  return trop_eval(T, b).argmin.size() >= 2;
}

FieldPoly initial_form(const SeriesPoly& f, const std::vector<Rational>& b) {
  TropEvalResult at = trop_eval(tropicalize(f), b);
  FieldPoly out;
  out.n = f.n;
  for (const auto& i : at.argmin)
    out.terms.emplace(i, principal_coefficient(f.terms.at(i)));
  return out;
}

std::optional<Rational> epsilon_gap(const SeriesPoly& f, const std::vector<Rational>& b) {
  if (f.is_zero()) throw DomainError("support gap of the zero polynomial");
  if (static_cast<std::size_t>(f.n) != b.size())
    throw DomainError("support gap: arity mismatch");
  std::set<Rational> support;
  for (const auto& [i, c] : f.terms) {
    if (!c.exact())
      throw IndeterminatePrecision("support gap needs exact coefficients");
    Rational delta = inner(i, b);
    for (const auto& [e, v] : c.terms) support.insert(e + delta);
  }
  if (support.size() < 2) return std::nullopt;
  auto it = support.begin();
  Rational least = *it++;
  return *it - least;
}

std::vector<Rational> newton_polygon_candidates(const SeriesPoly& f) {
  if (f.n != 1) throw DomainError("polygon candidates need a univariate polynomial");
  if (f.is_zero()) throw DomainError("polygon candidates of the zero polynomial");

  std::vector<std::pair<Rational, Rational>> pts;  // (degree, coefficient order)
  for (const auto& [i, c] : f.terms) pts.emplace_back(Rational(i[0]), *order(c));
  if (pts.size() < 2) return {};

  // Lower convex hull, strictly convex (collinear middles dropped): pop while
  // the last vertex sits on or above the segment to the incoming point.
  std::vector<std::pair<Rational, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& m = hull.back();
      if ((m.second - a.second) * (p.first - m.first) >=
          (p.second - m.second) * (m.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  std::vector<Rational> out;
  for (std::size_t k = 1; k < hull.size(); ++k)
    out.push_back(Rational(-(hull[k].second - hull[k - 1].second) /
                           (hull[k].first - hull[k - 1].first)));
  std::reverse(out.begin(), out.end());  // hull slopes increase, so negations ascend reversed
  return out;
}

}  // namespace troplift
