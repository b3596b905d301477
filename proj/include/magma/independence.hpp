#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "magma/linalg.hpp"
#include "magma/polynomial.hpp"

namespace magma {

enum class IndependenceStatus {
  // No relation exists up to the stated degree bound; nothing is claimed
  // beyond it.
  independent_up_to,
  // A concrete relation was found; `witness` evaluates to zero.
  dependent,
  // A structural certificate applies. When `bound` is absent the
  // certificate is not degree-limited at all.
  reduced_certified,
};

const char* to_string(IndependenceStatus s);

struct IndependenceVerdict {
  IndependenceStatus status;
  std::optional<int> bound;
  // Nonzero polynomial over X1..Xn in primitive integer form; present
  // exactly when status == dependent.
  std::optional<Polynomial> witness;
};

struct SearchOptions {
  std::size_t monomial_budget = 1'000'000;
};

// Monomials over the indeterminates, grouped by the total degree their
// evaluation at the images lands in, together with those evaluations.
// Entries are in canonical monomial order within each class.
struct EvaluatedClass {
  std::vector<MonomialCode> monomials;  // over X1..Xn
  std::vector<Polynomial> values;       // over the image alphabet
};

// Builds every class up to substituted degree dmax by grafting smaller
// classes (values via the corresponding products). For inhomogeneous
// images a monomial's class is the degree of its evaluation's top form.
// Throws BudgetError — before materializing anything — when some class
// would exceed the monomial budget.
std::map<int, EvaluatedClass> enumerate_evaluations(const std::vector<Polynomial>& images,
                                                    int dmax, std::size_t monomial_budget);

// Exhaustive kernel search for polynomial relations among ps, over all
// X-monomials whose substituted degree stays within dmax.
IndependenceVerdict relation_search(const std::vector<Polynomial>& ps, int dmax,
                                    const SearchOptions& options = {});

// For nonzero homogeneous polynomials of one common degree: linear
// independence already settles algebraic independence outright, so the
// verdict is either an unbounded certificate or a linear relation.
IndependenceVerdict same_degree_fast_path(const std::vector<Polynomial>& hs);

// Certificate route for mixed degrees: distinct leading forms whose set is
// itself independent certify the whole family. Falls back to
// relation_search on the inputs when the hypotheses fail.
IndependenceVerdict is_reduced(const std::vector<Polynomial>& ps, int dmax,
                               const SearchOptions& options = {});

}  // namespace magma
