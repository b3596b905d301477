#pragma once

#include <optional>
#include <vector>

#include "magma/polynomial.hpp"

namespace magma {

// Reduced row-echelon basis of a subspace of one homogeneous slice. Rows are
// monic at their pivot (the smallest monomial in canonical order), pivots
// strictly increase down the rows, and no pivot monomial appears in any
// other row. Reduced echelon form is unique, so equal spans give equal
// bases — that is what makes every downstream result deterministic.
class EchelonBasis {
 public:
  explicit EchelonBasis(AlphabetRef alphabet);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  const std::vector<Polynomial>& rows() const noexcept { return rows_; }
  std::vector<MonomialCode> pivots() const;
  std::size_t rank() const noexcept { return rows_.size(); }
  // Fixed by the first inserted row; empty bases have none.
  std::optional<int> degree() const noexcept { return degree_; }

  // v minus its projection onto the span; zero iff v lies in the span.
  Polynomial reduce(const Polynomial& v) const;
  bool contains(const Polynomial& v) const { return reduce(v).is_zero(); }

  // Inserts v's reduction when it is nonzero, keeping the reduced form.
  // Returns the monic row actually added, or nullopt when v was already in
  // the span.
  std::optional<Polynomial> insert(const Polynomial& v);

  bool operator==(const EchelonBasis& other) const;

 private:
  AlphabetRef alphabet_;
  std::vector<Polynomial> rows_;  // sorted by pivot
  std::optional<int> degree_;
};

// Basis of the span of the given vectors (all of one degree; zero vectors
// are allowed and contribute nothing).
EchelonBasis echelonize(AlphabetRef alphabet, const std::vector<Polynomial>& vectors);

inline Polynomial reduce(const Polynomial& v, const EchelonBasis& basis) {
  return basis.reduce(v);
}

struct ExtendResult {
  EchelonBasis basis;
  // The monic reduced vectors that were actually added, in candidate order.
  std::vector<Polynomial> added;
};

// Grows `core` to cover the candidates as well. The returned rows extend a
// basis of core's span to one of span(core ∪ candidates).
ExtendResult extend_basis(const EchelonBasis& core, const std::vector<Polynomial>& candidates);

// ---- elimination plumbing shared by the relation search and the
// ---- generator-extraction machinery ----

// Forward (non-reduced) echelon over arbitrary polynomials — rows may mix
// degrees — where every row carries a tag mirroring the row operations that
// produced it. Feeding vectors with independent tags turns vanishing
// reductions into kernel combinations, and tags of stored rows into
// preimage data.
class TrackedEliminator {
 public:
  struct Row {
    Polynomial value;
    Polynomial tag;
  };

  TrackedEliminator(AlphabetRef value_alphabet, AlphabetRef tag_alphabet);

  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  // Forward-eliminates value against the stored rows, mirroring every
  // operation on tag. Without inserting.
  Row reduce(Polynomial value, Polynomial tag) const;

  struct InsertOutcome {
    bool inserted;
    // When inserted: the stored row's tag (after reduction and monic
    // scaling). Otherwise: the accumulated kernel combination.
    Polynomial tag;
  };

  // reduce(), then store the monic result when the value survives.
  InsertOutcome insert(Polynomial value, Polynomial tag);

 private:
  AlphabetRef value_alphabet_, tag_alphabet_;
  std::vector<Row> rows_;  // sorted by value pivot
};

// Unique reduced echelon representation of the span of arbitrary (possibly
// mixed-degree) polynomials; rows monic, sorted by pivot, fully reduced.
std::vector<Polynomial> reduced_span(AlphabetRef alphabet,
                                     const std::vector<Polynomial>& vectors);

}  // namespace magma
