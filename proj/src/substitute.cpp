#include "magma/substitute.hpp"

#include "magma/error.hpp"

namespace magma {

const AlphabetRef& SubstitutionMap::target() const {
  if (images.empty()) throw HypothesisError("substitution map needs at least one image");
  return images.front().alphabet();
}

void SubstitutionMap::validate() const {
  if (images.empty()) throw HypothesisError("substitution map needs at least one image");
  for (const Polynomial& p : images) {
    if (!same_alphabet(p.alphabet(), images.front().alphabet()))
      throw HypothesisError("substitution images must share one alphabet");
  }
}

Substituter::Substituter(SubstitutionMap map) : map_(std::move(map)) { map_.validate(); }

Polynomial Substituter::eval_monomial(const MonomialCode& code) {
  if (code.degree() == 1) {
    SymbolIndex i = code.word.letters.front();
    if (i >= map_.images.size())
      throw HypothesisError("polynomial uses indeterminate X" + std::to_string(i + 1) +
                            " but only " + std::to_string(map_.images.size()) +
                            " images were given");
    return map_.images[i];
  }
  if (auto it = memo_.find(code); it != memo_.end()) return it->second;
  auto [l, r] = split_code(code);
  Polynomial v = mul(eval_monomial(l), eval_monomial(r));
  return memo_.emplace(code, std::move(v)).first->second;
}

Polynomial Substituter::operator()(const Polynomial& p) {
  Polynomial acc = Polynomial::zero(map_.target());
  for (const auto& e : p.entries()) acc = add(acc, scale(e.coeff, eval_monomial(e.code)));
  return acc;
}

Polynomial substitute(const Polynomial& p, const SubstitutionMap& map) {
  Substituter s(map);
  return s(p);
}

}  // namespace magma
