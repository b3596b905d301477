#include "magma/code.hpp"

#include <algorithm>

#include "magma/error.hpp"

namespace magma {

Shape Shape::from_bits(const std::string& bits) {
  if (bits.empty()) throw ParseError("empty shape");
  int ones = 0, zeros = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c == '1')
      ++ones;
    else if (c == '0')
      ++zeros;
    else
      throw ParseError("shape must be over {0,1}", i);
    // A full binary tree in preorder closes (#leaves == #internal + 1)
    // exactly once, at the end.
    if (zeros == ones + 1 && i + 1 != bits.size())
      throw ParseError("shape closes before the end", i);
  }
  if (zeros != ones + 1) throw ParseError("shape does not describe a full binary tree", bits.size());
  return Shape(bits, zeros);
}

Shape Shape::graft(const Shape& left, const Shape& right) {
  std::string bits;
  bits.reserve(1 + left.bits_.size() + right.bits_.size());
  bits.push_back('1');
  bits += left.bits_;
  bits += right.bits_;
  return Shape(std::move(bits), left.degree_ + right.degree_);
}

std::strong_ordering Shape::operator<=>(const Shape& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return bits_.compare(other.bits_) <=> 0;
}

std::size_t MonomialCodeHash::operator()(const MonomialCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (char b : c.shape.bits()) mix(static_cast<std::size_t>(b));
  for (SymbolIndex s : c.word.letters) mix(static_cast<std::size_t>(s) + 0x9e3779b9u);
  return h;
}

MonomialCode make_code(Shape shape, Word word) {
  if (shape.degree() != word.degree())
    throw ParseError("shape has " + std::to_string(shape.degree()) + " leaves but word has " +
                     std::to_string(word.degree()) + " symbols");
  return MonomialCode{std::move(shape), std::move(word)};
}

MonomialCode embed(const Term& t) {
  if (t.is_leaf()) return MonomialCode{Shape::leaf(), Word{{t.symbol()}}};
  return graft(embed(t.left()), embed(t.right()));
}

namespace {
Term build_term(const AlphabetRef& alphabet, const std::string& bits, const Word& word,
                std::size_t& bi, std::size_t& wi) {
  if (bits[bi] == '0') {
    ++bi;
    return Term::leaf(alphabet, word.letters[wi++]);
  }
  ++bi;
  Term l = build_term(alphabet, bits, word, bi, wi);
  Term r = build_term(alphabet, bits, word, bi, wi);
  return Term::node(l, r);
}
}  // namespace

Term unembed(const AlphabetRef& alphabet, const MonomialCode& code) {
  if (!alphabet) throw InternalError("unembed needs an alphabet");
  for (SymbolIndex s : code.word.letters) {
    if (s >= alphabet->size())
      throw HypothesisError("code symbol index " + std::to_string(s) +
                            " outside alphabet of size " + std::to_string(alphabet->size()));
  }
  std::size_t bi = 0, wi = 0;
  Term t = build_term(alphabet, code.shape.bits(), code.word, bi, wi);
  if (bi != code.shape.bits().size() || wi != code.word.letters.size())
    throw InternalError("code traversal out of sync");
  return t;
}

MonomialCode graft(const MonomialCode& left, const MonomialCode& right) {
  Word w;
  w.letters.reserve(left.word.letters.size() + right.word.letters.size());
  w.letters = left.word.letters;
  w.letters.insert(w.letters.end(), right.word.letters.begin(), right.word.letters.end());
  return MonomialCode{Shape::graft(left.shape, right.shape), std::move(w)};
}

std::pair<MonomialCode, MonomialCode> split_code(const MonomialCode& code) {
  const std::string& bits = code.shape.bits();
  if (code.degree() < 2) throw InternalError("cannot split a leaf code");
  // Find where the left subtree's preorder run closes: the first position
  // after the root where #zeros == #ones + 1.
  int ones = 0, zeros = 0;
  std::size_t end = 1;
  for (; end < bits.size(); ++end) {
    if (bits[end] == '1')
      ++ones;
    else
      ++zeros;
    if (zeros == ones + 1) {
      ++end;
      break;
    }
  }
  std::string left_bits = bits.substr(1, end - 1);
  std::string right_bits = bits.substr(end);
  int left_deg = zeros;
  Word lw{std::vector<SymbolIndex>(code.word.letters.begin(), code.word.letters.begin() + left_deg)};
  Word rw{std::vector<SymbolIndex>(code.word.letters.begin() + left_deg, code.word.letters.end())};
  return {MonomialCode{Shape::from_bits(left_bits), std::move(lw)},
          MonomialCode{Shape::from_bits(right_bits), std::move(rw)}};
}

std::vector<Shape> shapes_of_degree(int n) {
  if (n < 1) throw HypothesisError("degree must be positive");
  std::vector<std::vector<Shape>> table;
  table.resize(static_cast<std::size_t>(n) + 1);
  table[1] = {Shape::leaf()};
  for (int d = 2; d <= n; ++d) {
    std::vector<Shape>& out = table[d];
    for (int a = 1; a < d; ++a) {
      for (const Shape& l : table[a])
        for (const Shape& r : table[d - a]) out.push_back(Shape::graft(l, r));
    }
    std::sort(out.begin(), out.end());
  }
  return table[n];
}

std::vector<MonomialCode> monomials_of_degree(const Alphabet& alphabet, int n) {
  std::vector<Shape> shapes = shapes_of_degree(n);
  std::vector<MonomialCode> out;
  const std::size_t k = alphabet.size();
  for (const Shape& s : shapes) {
    // Odometer over words, lexicographically ascending.
    std::vector<SymbolIndex> word(static_cast<std::size_t>(n), 0);
    for (;;) {
      out.push_back(MonomialCode{s, Word{word}});
      int pos = n - 1;
      while (pos >= 0 && word[pos] + 1 == k) word[pos--] = 0;
      if (pos < 0) break;
      ++word[pos];
    }
  }
  return out;
}

Term substitute_term(const Term& pattern, const std::vector<Term>& args) {
  if (args.empty()) throw HypothesisError("substitution needs at least one argument");
  for (const Term& a : args) {
    if (!same_alphabet(a.alphabet(), args.front().alphabet()))
      throw HypothesisError("substitution arguments must share one alphabet");
  }
  if (pattern.is_leaf()) {
    if (pattern.symbol() >= args.size())
      throw HypothesisError("pattern uses indeterminate " + std::to_string(pattern.symbol() + 1) +
                            " but only " + std::to_string(args.size()) + " arguments were given");
    return args[pattern.symbol()];
  }
  return Term::node(substitute_term(pattern.left(), args),
                    substitute_term(pattern.right(), args));
}

bool product_type_respects_substitution(const Term& pattern, const Term& other,
                                        const std::vector<Term>& args) {
  if (args.empty()) throw HypothesisError("substitution needs at least one argument");
  int common = args.front().degree();
  for (const Term& a : args) {
    if (a.degree() != common)
      throw HypothesisError("arguments must share one degree");
  }
  if (embed(pattern).shape == embed(other).shape) return true;  // nothing to respect
  Shape s1 = embed(substitute_term(pattern, args)).shape;
  Shape s2 = embed(substitute_term(other, args)).shape;
  return !(s1 == s2);
}

}  // namespace magma
