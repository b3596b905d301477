#include "magma/term.hpp"

#include "magma/error.hpp"

namespace magma {

struct Term::Node {
  SymbolIndex symbol = 0;  // meaningful on leaves only
  std::shared_ptr<const Node> left, right;
  int degree = 1;
};

Term::Term(std::shared_ptr<const Node> node, AlphabetRef alphabet)
    : node_(std::move(node)), alphabet_(std::move(alphabet)) {}

Term Term::leaf(AlphabetRef alphabet, SymbolIndex symbol) {
  if (!alphabet) throw InternalError("term needs an alphabet");
  if (symbol >= alphabet->size()) throw HypothesisError("leaf symbol outside the alphabet");
  auto n = std::make_shared<Node>();
  n->symbol = symbol;
  return Term(std::move(n), std::move(alphabet));
}

Term Term::node(const Term& left, const Term& right) {
  if (!same_alphabet(left.alphabet_, right.alphabet_))
    throw HypothesisError("cannot pair terms over different alphabets");
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->degree = left.degree() + right.degree();
  return Term(std::move(n), left.alphabet_);
}

bool Term::is_leaf() const noexcept { return node_->left == nullptr; }

SymbolIndex Term::symbol() const {
  if (!is_leaf()) throw InternalError("symbol() on an internal node");
  return node_->symbol;
}

Term Term::left() const {
  if (is_leaf()) throw InternalError("left() on a leaf");
  return Term(node_->left, alphabet_);
}

Term Term::right() const {
  if (is_leaf()) throw InternalError("right() on a leaf");
  return Term(node_->right, alphabet_);
}

int Term::degree() const noexcept { return node_->degree; }

namespace {
bool same_tree(const Term& a, const Term& b) {
  if (a.degree() != b.degree()) return false;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.symbol() == b.symbol();
  return same_tree(a.left(), b.left()) && same_tree(a.right(), b.right());
}
}  // namespace

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return same_alphabet(alphabet_, other.alphabet_);
  return same_alphabet(alphabet_, other.alphabet_) && same_tree(*this, other);
}

}  // namespace magma
