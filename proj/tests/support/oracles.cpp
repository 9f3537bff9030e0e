#include "oracles.hpp"

#include "troplift/errors.hpp"

namespace troplift::testsupport {

std::map<Rational, FieldPoly> layer_expansion(const Field& K, const SeriesPoly& f,
                                              const std::vector<Rational>& b) {
  std::map<Rational, FieldPoly> layers;
  for (const auto& [i, c] : f.terms) {
    if (!c.exact()) throw DomainError("layer expansion needs exact coefficients");
    Rational inner(0);
    for (std::size_t v = 0; v < b.size(); ++v) inner += b[v] * Rational(i[v]);
    for (const auto& [e, a] : c.terms) {
      FieldPoly& layer = layers[e + inner];
      layer.n = f.n;
      add_term(K, layer, i, a);
    }
  }
  return layers;
}

PuiseuxSeries naive_mul(const Field& K, const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (!a.exact() || !b.exact()) throw DomainError("naive product needs exact series");
  std::map<Rational, FieldElement> acc;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      auto [it, fresh] = acc.emplace(ea + eb, K.mul(ca, cb));
      if (!fresh) it->second = K.add(it->second, K.mul(ca, cb));
    }
  PuiseuxSeries out;
  for (const auto& [e, c] : acc)
    if (!K.is_zero(c)) out.terms.emplace_back(e, c);
  return out;
}

}  // namespace troplift::testsupport
