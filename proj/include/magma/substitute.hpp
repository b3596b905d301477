#pragma once

#include <unordered_map>
#include <vector>

#include "magma/polynomial.hpp"

namespace magma {

// Images for the indeterminates: X_{i+1} |-> images[i]. All images share one
// alphabet (the target of the induced homomorphism). Zero and mixed-degree
// images are allowed.
struct SubstitutionMap {
  std::vector<Polynomial> images;

  const AlphabetRef& target() const;
  void validate() const;
};

// Evaluates polynomials over the indeterminates at the images. Memoizes
// sub-monomial values, so it pays to reuse one instance across many calls
// with the same images. Not safe for concurrent use; give each thread its
// own copy.
class Substituter {
 public:
  explicit Substituter(SubstitutionMap map);

  Polynomial eval_monomial(const MonomialCode& code);
  Polynomial operator()(const Polynomial& p);

 private:
  SubstitutionMap map_;
  std::unordered_map<MonomialCode, Polynomial, MonomialCodeHash> memo_;
};

// One-shot form of the above.
Polynomial substitute(const Polynomial& p, const SubstitutionMap& map);

}  // namespace magma
