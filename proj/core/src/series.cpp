#include "troplift/series.hpp"

#include <map>

#include "troplift/errors.hpp"

namespace troplift {

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a.truncation == b.truncation && a.terms == b.terms;
}

PuiseuxSeries series_zero() { return PuiseuxSeries{}; }

PuiseuxSeries series_constant(const Field& K, const FieldElement& c) {
  return series_term(K, Rational(0), c);
}

PuiseuxSeries series_term(const Field& K, const Rational& e, const FieldElement& c) {
  PuiseuxSeries s;
  if (!K.is_zero(c)) s.terms.emplace_back(e, c);
  return s;
}

std::optional<Rational> order(const PuiseuxSeries& s) {
  if (!s.terms.empty()) return s.terms.front().first;
  if (s.exact()) return std::nullopt;
  throw IndeterminatePrecision("order of an empty truncated series is not determined");
}

std::optional<Rational> order_lower_bound(const PuiseuxSeries& s) {
  if (!s.terms.empty()) return s.terms.front().first;
  return s.truncation;  // nullopt for the exact zero
}

FieldElement principal_coefficient(const PuiseuxSeries& s) {
  if (s.terms.empty()) throw DomainError("principal coefficient of a series with no terms");
  return s.terms.front().second;
}

namespace {

// Applies the truncation bound and restores the term invariants.
PuiseuxSeries finish(const Field& K, std::vector<std::pair<Rational, FieldElement>> terms,
                     std::optional<Rational> trunc) {
  PuiseuxSeries out;
  out.truncation = std::move(trunc);
  for (auto& t : terms) {
    if (K.is_zero(t.second)) continue;
    if (out.truncation && t.first >= *out.truncation) continue;
    out.terms.push_back(std::move(t));
  }
  return out;
}

std::optional<Rational> min_trunc(const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

PuiseuxSeries add(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b) {
  std::vector<std::pair<Rational, FieldElement>> merged;
  merged.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      merged.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      merged.push_back(b.terms[j++]);
    } else {
      merged.emplace_back(a.terms[i].first, K.add(a.terms[i].second, b.terms[j].second));
      ++i;
      ++j;
    }
  }
  return finish(K, std::move(merged), min_trunc(a.truncation, b.truncation));
}

PuiseuxSeries sub(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return add(K, a, neg(b));
}

PuiseuxSeries neg(const PuiseuxSeries& a) {
  PuiseuxSeries out = a;
  for (auto& t : out.terms) {
    if (t.second.backend() == Backend::Rational)
      t.second = FieldElement::of(Rational(-t.second.rat()));
    else
      t.second = FieldElement::of(-t.second.cx());
  }
  return out;
}

PuiseuxSeries mul(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return series_zero();
  std::optional<Rational> trunc;
  if (b.truncation) trunc = min_trunc(trunc, Rational(*order_lower_bound(a) + *b.truncation));
  if (a.truncation) trunc = min_trunc(trunc, Rational(*order_lower_bound(b) + *a.truncation));
  std::map<Rational, FieldElement> acc;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Rational e = ea + eb;
      if (trunc && e >= *trunc) continue;
      FieldElement prod = K.mul(ca, cb);
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(std::move(e), prod);
      else
        it->second = K.add(it->second, prod);
    }
  std::vector<std::pair<Rational, FieldElement>> terms(acc.begin(), acc.end());
  return finish(K, std::move(terms), trunc);
}

PuiseuxSeries pow(const Field& K, const PuiseuxSeries& s, unsigned long e) {
  PuiseuxSeries acc = series_constant(K, K.one());
  PuiseuxSeries base = s;
  while (e != 0) {
    if (e & 1) acc = mul(K, acc, base);
    if (e >>= 1) base = mul(K, base, base);
  }
  return acc;
}

PuiseuxSeries truncate(const PuiseuxSeries& s, const Rational& T) {
  PuiseuxSeries out;
  out.truncation = s.truncation ? std::min(*s.truncation, T) : T;
  for (const auto& t : s.terms)
    if (t.first < *out.truncation) out.terms.push_back(t);
  return out;
}

PuiseuxSeries shift(const PuiseuxSeries& s, const Rational& delta) {
  PuiseuxSeries out = s;
  for (auto& t : out.terms) t.first += delta;
  if (out.truncation) *out.truncation += delta;
  return out;
}

PuiseuxSeries scale(const Field& K, const PuiseuxSeries& s, const FieldElement& c) {
  if (K.is_zero(c)) return series_zero();
  PuiseuxSeries out;
  out.truncation = s.truncation;
  for (const auto& t : s.terms) {
    FieldElement prod = K.mul(t.second, c);
    if (!K.is_zero(prod)) out.terms.emplace_back(t.first, prod);
  }
  return out;
}

std::string t_power_text(const Rational& e) {
  if (e == 0) return "1";
  if (e == 1) return "t";
  if (denominator(e) == 1 && e > 0) return "t^" + to_string(e);
  return "t^(" + to_string(e) + ")";
}

namespace {

bool composite_text(const std::string& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') return true;
  return false;
}

}  // namespace

std::string to_string(const Field& K, const PuiseuxSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms) {
    std::string piece;
    std::string cs = K.to_string(c);
    if (e == 0) {
      piece = composite_text(cs) ? "(" + cs + ")" : cs;
    } else if (c == K.one()) {
      piece = t_power_text(e);
    } else if (c == K.from_int(-1)) {
      piece = "-" + t_power_text(e);
    } else {
      if (composite_text(cs)) cs = "(" + cs + ")";
      piece = cs + "*" + t_power_text(e);
    }
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  if (s.truncation) {
    std::string oterm = "O(" + t_power_text(*s.truncation) + ")";
    out = out.empty() ? oterm : out + " + " + oterm;
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace troplift
