#pragma once

#include <memory>

#include "magma/alphabet.hpp"

namespace magma {

// A monomial over an alphabet: a planar full binary tree whose leaves carry
// symbols. Immutable; subtrees are shared, so copies are cheap.
class Term {
 public:
  static Term leaf(AlphabetRef alphabet, SymbolIndex symbol);
  static Term node(const Term& left, const Term& right);

  bool is_leaf() const noexcept;
  SymbolIndex symbol() const;  // leaf only
  Term left() const;           // node only
  Term right() const;          // node only
  int degree() const noexcept;
  const AlphabetRef& alphabet() const noexcept { return alphabet_; }

  // Structural equality (same alphabet, same tree).
  bool operator==(const Term& other) const;

 private:
  struct Node;
  Term(std::shared_ptr<const Node> node, AlphabetRef alphabet);

  std::shared_ptr<const Node> node_;
  AlphabetRef alphabet_;
};

inline int degree(const Term& t) { return t.degree(); }

}  // namespace magma
