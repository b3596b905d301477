#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "magma/term.hpp"

namespace magma {

// The preorder skeleton of a full binary tree: '1' for an internal node,
// '0' for a leaf. This is the product type of a monomial — its image in the
// free magma on one generator.
class Shape {
 public:
  static Shape leaf() { return Shape("0", 1); }
  // Validates the encoding; throws ParseError on a malformed bitstring.
  static Shape from_bits(const std::string& bits);
  static Shape graft(const Shape& left, const Shape& right);

  const std::string& bits() const noexcept { return bits_; }
  int degree() const noexcept { return degree_; }  // leaf count

  // (degree, bits lexicographic); within one degree this is plain
  // lexicographic order on the bitstrings.
  std::strong_ordering operator<=>(const Shape& other) const;
  bool operator==(const Shape& other) const { return bits_ == other.bits_; }

 private:
  Shape(std::string bits, int degree) : bits_(std::move(bits)), degree_(degree) {}

  std::string bits_;
  int degree_;
};

// The sequence type: the left-to-right word of leaf symbols. Nonempty for
// every valid monomial.
struct Word {
  std::vector<SymbolIndex> letters;

  int degree() const noexcept { return static_cast<int>(letters.size()); }
  auto operator<=>(const Word&) const = default;
};

// The (product type, sequence type) pair. The embedding of the free magma
// into (shapes) x (words) is injective, so a code is a faithful stand-in
// for the tree itself.
struct MonomialCode {
  Shape shape;
  Word word;

  int degree() const noexcept { return shape.degree(); }

  // The canonical total order used everywhere: degree, then shape bits
  // lexicographically, then the word lexicographically by symbol index.
  std::strong_ordering operator<=>(const MonomialCode& other) const {
    if (auto c = shape <=> other.shape; c != 0) return c;
    return word <=> other.word;
  }
  bool operator==(const MonomialCode& other) const {
    return shape == other.shape && word == other.word;
  }
};

struct MonomialCodeHash {
  std::size_t operator()(const MonomialCode& c) const noexcept;
};

// Validating constructor for codes arriving from serialized input; throws
// ParseError when the word length does not match the shape's leaf count.
MonomialCode make_code(Shape shape, Word word);

MonomialCode embed(const Term& t);
// Inverse of embed. Throws HypothesisError when the code's symbols fall
// outside the alphabet (shape/word degree agreement is a MonomialCode
// invariant).
Term unembed(const AlphabetRef& alphabet, const MonomialCode& code);

// The pairing on codes: preorder-concatenates shapes and concatenates words.
MonomialCode graft(const MonomialCode& left, const MonomialCode& right);

// Splits a degree >= 2 code into the codes of its two subtrees.
std::pair<MonomialCode, MonomialCode> split_code(const MonomialCode& code);

// All shapes of the given degree in ascending order. Count is the
// (degree-1)-st Catalan number.
std::vector<Shape> shapes_of_degree(int n);

// All degree-n codes over the alphabet in canonical ascending order.
std::vector<MonomialCode> monomials_of_degree(const Alphabet& alphabet, int n);

// Replaces leaf i of `pattern` (a term over indeterminates) by args[i].
// All args must share one alphabet.
Term substitute_term(const Term& pattern, const std::vector<Term>& args);

// With all args of one common degree: does Shape(pattern) != Shape(other)
// force the substituted shapes apart? (Always true; exposed as a checkable
// predicate.)
bool product_type_respects_substitution(const Term& pattern, const Term& other,
                                        const std::vector<Term>& args);

}  // namespace magma
