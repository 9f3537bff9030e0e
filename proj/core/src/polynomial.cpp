#include "troplift/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "troplift/errors.hpp"

namespace troplift {

bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
  return a.n == b.n && a.terms == b.terms;
}

bool operator==(const FieldPoly& a, const FieldPoly& b) {
  return a.n == b.n && a.terms == b.terms;
}

namespace {

void check_arity(int n, std::size_t len, const char* what) {
  if (static_cast<std::size_t>(n) != len) throw DomainError(std::string(what) + ": arity mismatch");
}

Multidegree erase_at(const Multidegree& i, int j) {
  Multidegree out;
  out.reserve(i.size() - 1);
  for (std::size_t k = 0; k < i.size(); ++k)
    if (static_cast<int>(k) != j) out.push_back(i[k]);
  return out;
}

Multidegree insert_at(const Multidegree& i, int j, unsigned d) {
  Multidegree out;
  out.reserve(i.size() + 1);
  for (std::size_t k = 0; k <= i.size(); ++k) {
    if (static_cast<int>(k) == j) out.push_back(d);
    if (k < i.size()) out.push_back(i[k]);
  }
  return out;
}

}  // namespace

void add_term(const Field& K, SeriesPoly& f, const Multidegree& i, const PuiseuxSeries& c) {
  if (c.is_exact_zero()) return;
  auto it = f.terms.find(i);
  if (it == f.terms.end()) {
    f.terms.emplace(i, c);
    return;
  }
  PuiseuxSeries s = add(K, it->second, c);
  if (s.is_exact_zero())
    f.terms.erase(it);
  else
    it->second = std::move(s);
}

void add_term(const Field& K, FieldPoly& p, const Multidegree& i, const FieldElement& c) {
  if (K.is_zero(c)) return;
  auto it = p.terms.find(i);
  if (it == p.terms.end()) {
    p.terms.emplace(i, c);
    return;
  }
  FieldElement s = K.add(it->second, c);
  if (K.is_zero(s))
    p.terms.erase(it);
  else
    it->second = s;
}

SeriesPoly add(const Field& K, const SeriesPoly& f, const SeriesPoly& g) {
  if (f.n != g.n) throw DomainError("polynomial addition: arity mismatch");
  SeriesPoly out = f;
  for (const auto& [i, c] : g.terms) add_term(K, out, i, c);
  return out;
}

SeriesPoly neg(const SeriesPoly& f) {
  SeriesPoly out;
  out.n = f.n;
  for (const auto& [i, c] : f.terms) out.terms.emplace(i, neg(c));
  return out;
}

SeriesPoly mul(const Field& K, const SeriesPoly& f, const SeriesPoly& g) {
  if (f.n != g.n) throw DomainError("polynomial multiplication: arity mismatch");
  SeriesPoly out;
  out.n = f.n;
  for (const auto& [i, ci] : f.terms)
    for (const auto& [j, cj] : g.terms) {
      Multidegree k(i.size());
      for (std::size_t m = 0; m < i.size(); ++m) k[m] = i[m] + j[m];
      add_term(K, out, k, mul(K, ci, cj));
    }
  return out;
}

SeriesPoly pow(const Field& K, const SeriesPoly& f, unsigned long e) {
  SeriesPoly acc;
  acc.n = f.n;
  acc.terms.emplace(Multidegree(f.n, 0), series_constant(K, K.one()));
  SeriesPoly base = f;
  while (e != 0) {
    if (e & 1) acc = mul(K, acc, base);
    if (e >>= 1) base = mul(K, base, base);
  }
  return acc;
}

FieldPoly add(const Field& K, const FieldPoly& p, const FieldPoly& q) {
  if (p.n != q.n) throw DomainError("polynomial addition: arity mismatch");
  FieldPoly out = p;
  for (const auto& [i, c] : q.terms) add_term(K, out, i, c);
  return out;
}

FieldPoly neg(const Field& K, const FieldPoly& p) {
  FieldPoly out;
  out.n = p.n;
  for (const auto& [i, c] : p.terms) out.terms.emplace(i, K.neg(c));
  return out;
}

FieldPoly mul(const Field& K, const FieldPoly& p, const FieldPoly& q) {
  if (p.n != q.n) throw DomainError("polynomial multiplication: arity mismatch");
  FieldPoly out;
  out.n = p.n;
  for (const auto& [i, ci] : p.terms)
    for (const auto& [j, cj] : q.terms) {
      Multidegree k(i.size());
      for (std::size_t m = 0; m < i.size(); ++m) k[m] = i[m] + j[m];
      add_term(K, out, k, K.mul(ci, cj));
    }
  return out;
}

FieldPoly scale(const Field& K, const FieldPoly& p, const FieldElement& c) {
  FieldPoly out;
  out.n = p.n;
  if (K.is_zero(c)) return out;
  for (const auto& [i, ci] : p.terms) {
    FieldElement prod = K.mul(ci, c);
    if (!K.is_zero(prod)) out.terms.emplace(i, prod);
  }
  return out;
}

SeriesPoly substitute_scaled(const SeriesPoly& f, const std::vector<Rational>& b) {
  check_arity(f.n, b.size(), "substitute_scaled");
  SeriesPoly out;
  out.n = f.n;
  for (const auto& [i, c] : f.terms) {
    Rational delta = 0;
    for (std::size_t k = 0; k < b.size(); ++k) delta += Rational(i[k]) * b[k];
    out.terms.emplace(i, shift(c, delta));
  }
  return out;
}

SeriesPoly substitute_coordinate(const Field& K, const SeriesPoly& f, int j,
                                 const PuiseuxSeries& s) {
  if (j < 0 || j >= f.n) throw DomainError("substitute_coordinate: no such variable");
  if (!s.exact()) throw DomainError("substitute_coordinate needs an exact series");
  SeriesPoly out;
  out.n = f.n - 1;
  std::map<unsigned, PuiseuxSeries> powers;  // s^d, computed on demand
  powers.emplace(0u, series_constant(K, K.one()));
  for (const auto& [i, c] : f.terms) {
    unsigned d = i[j];
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, pow(K, s, d)).first;
    add_term(K, out, erase_at(i, j), mul(K, c, it->second));
  }
  return out;
}

PuiseuxSeries evaluate(const Field& K, const SeriesPoly& f,
                       const std::vector<PuiseuxSeries>& point) {
  check_arity(f.n, point.size(), "evaluate");
  std::vector<std::map<unsigned, PuiseuxSeries>> powers(point.size());
  auto power = [&](int j, unsigned d) -> const PuiseuxSeries& {
    auto it = powers[j].find(d);
    if (it == powers[j].end()) it = powers[j].emplace(d, pow(K, point[j], d)).first;
    return it->second;
  };
  PuiseuxSeries acc = series_zero();
  for (const auto& [i, c] : f.terms) {
    PuiseuxSeries prod = c;
    for (int j = 0; j < f.n; ++j)
      if (i[j] != 0) prod = mul(K, prod, power(j, i[j]));
    acc = add(K, acc, prod);
  }
  return acc;
}

FieldElement evaluate(const Field& K, const FieldPoly& p,
                      const std::vector<FieldElement>& point) {
  check_arity(p.n, point.size(), "evaluate");
  if (p.terms.empty()) return K.zero();
  if (p.n == 0) return p.terms.begin()->second;

  // Horner in the first variable over recursively evaluated tails.
  std::map<unsigned, FieldPoly> groups;
  for (const auto& [i, c] : p.terms) {
    FieldPoly& g = groups[i[0]];
    g.n = p.n - 1;
    g.terms.emplace(erase_at(i, 0), c);
  }
  std::vector<FieldElement> tail(point.begin() + 1, point.end());
  FieldElement acc = K.zero();
  unsigned prev = 0;
  bool first = true;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    FieldElement v = evaluate(K, it->second, tail);
    if (first) {
      acc = v;
      first = false;
    } else {
      acc = K.add(K.mul(acc, K.pow(point[0], prev - it->first)), v);
    }
    prev = it->first;
  }
  return K.mul(acc, K.pow(point[0], prev));
}

FieldPoly partial_substitute(const Field& K, const FieldPoly& p, int j, const FieldElement& c) {
  if (j < 0 || j >= p.n) throw DomainError("partial_substitute: no such variable");
  FieldPoly out;
  out.n = p.n - 1;
  std::map<unsigned, FieldElement> powers;
  powers.emplace(0u, K.one());
  for (const auto& [i, ci] : p.terms) {
    unsigned d = i[j];
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, K.pow(c, d)).first;
    add_term(K, out, erase_at(i, j), K.mul(ci, it->second));
  }
  return out;
}

FactorMultiplicity factor_multiplicity(const Field& K, const FieldPoly& p, int j,
                                       const FieldElement& c) {
  if (p.is_zero()) throw DomainError("factor multiplicity of the zero polynomial");
  if (j < 0 || j >= p.n) throw DomainError("factor_multiplicity: no such variable");

  // p as univariate in x_j with (n-1)-variable polynomial coefficients.
  std::map<unsigned, FieldPoly> layers;
  for (const auto& [i, ci] : p.terms) {
    FieldPoly& layer = layers[i[j]];
    layer.n = p.n - 1;
    layer.terms.emplace(erase_at(i, j), ci);
  }

  int k = 0;
  for (;;) {
    unsigned top = layers.rbegin()->first;
    if (top == 0) break;  // constant in x_j, not divisible by (x_j - c)
    auto get = [&](unsigned d) -> FieldPoly {
      auto it = layers.find(d);
      if (it != layers.end()) return it->second;
      FieldPoly z;
      z.n = p.n - 1;
      return z;
    };
    // Synthetic division: quotient q_{d-1} = a_d + c*q_d descending.
    std::map<unsigned, FieldPoly> quotient;
    FieldPoly carry;
    carry.n = p.n - 1;
    for (unsigned d = top; d >= 1; --d) {
      carry = add(K, get(d), scale(K, carry, c));
      if (!carry.is_zero()) quotient[d - 1] = carry;
    }
    FieldPoly rem = add(K, get(0), scale(K, carry, c));
    if (!rem.is_zero()) break;
    ++k;
    layers = std::move(quotient);  // nonempty: the leading layer survives division
  }

  FactorMultiplicity out;
  out.multiplicity = k;
  out.quotient.n = p.n;
  for (const auto& [d, layer] : layers)
    for (const auto& [i, ci] : layer.terms)
      out.quotient.terms.emplace(insert_at(i, j, d), ci);
  return out;
}

std::vector<FieldElement> roots_univariate(const Field& K, const FieldPoly& p) {
  if (p.n != 1) throw DomainError("root finding needs a univariate polynomial");
  if (p.is_zero()) throw DomainError("root finding on the zero polynomial");
  unsigned deg = p.terms.rbegin()->first[0];
  std::vector<FieldElement> coeffs(deg + 1, K.zero());
  for (const auto& [i, c] : p.terms) coeffs[i[0]] = c;
  return K.roots_univariate(coeffs);
}

std::vector<Multidegree> display_order(const std::vector<Multidegree>& keys) {
  std::vector<Multidegree> out = keys;
  auto grade = [](const Multidegree& i) {
    return std::accumulate(i.begin(), i.end(), 0ul);
  };
  std::sort(out.begin(), out.end(), [&](const Multidegree& a, const Multidegree& b) {
    unsigned long ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return b < a;  // x before y inside a degree block
  });
  return out;
}

namespace {

std::string monomial_text(const Multidegree& i, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (i[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (i[k] > 1) out += "^" + std::to_string(i[k]);
  }
  return out;
}

bool composite_text(const std::string& s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') return true;
  return false;
}

std::string join_terms(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& piece : pieces) {
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const Field& K, const SeriesPoly& f,
                      const std::vector<std::string>& names) {
  check_arity(f.n, names.size(), "render");
  std::vector<Multidegree> keys;
  keys.reserve(f.terms.size());
  for (const auto& [i, c] : f.terms) keys.push_back(i);
  std::vector<std::string> pieces;
  for (const auto& i : display_order(keys)) {
    const PuiseuxSeries& c = f.terms.at(i);
    std::string mono = monomial_text(i, names);
    std::string cs = to_string(K, c);
    bool wrap = c.terms.size() > 1 || c.truncation.has_value();
    if (mono.empty()) {
      pieces.push_back(wrap ? "(" + cs + ")" : cs);
    } else if (c.terms.size() == 1 && !c.truncation && c.terms[0].first == 0) {
      const FieldElement& v = c.terms[0].second;
      if (v == K.one())
        pieces.push_back(mono);
      else if (v == K.from_int(-1))
        pieces.push_back("-" + mono);
      else {
        std::string vs = K.to_string(v);
        if (composite_text(vs)) vs = "(" + vs + ")";
        pieces.push_back(vs + "*" + mono);
      }
    } else {
      if (wrap) cs = "(" + cs + ")";
      pieces.push_back(cs + "*" + mono);
    }
  }
  return join_terms(pieces);
}

std::string to_string(const Field& K, const FieldPoly& p,
                      const std::vector<std::string>& names) {
  check_arity(p.n, names.size(), "render");
  std::vector<Multidegree> keys;
  keys.reserve(p.terms.size());
  for (const auto& [i, c] : p.terms) keys.push_back(i);
  std::vector<std::string> pieces;
  for (const auto& i : display_order(keys)) {
    const FieldElement& c = p.terms.at(i);
    std::string mono = monomial_text(i, names);
    if (mono.empty()) {
      std::string cs = K.to_string(c);
      pieces.push_back(composite_text(cs) ? "(" + cs + ")" : cs);
    } else if (c == K.one()) {
      pieces.push_back(mono);
    } else if (c == K.from_int(-1)) {
      pieces.push_back("-" + mono);
    } else {
      std::string cs = K.to_string(c);
      if (composite_text(cs)) cs = "(" + cs + ")";
      pieces.push_back(cs + "*" + mono);
    }
  }
  return join_terms(pieces);
}

}  // namespace troplift
