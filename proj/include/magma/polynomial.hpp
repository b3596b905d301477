#pragma once

#include <map>
#include <optional>
#include <vector>

#include "magma/code.hpp"
#include "magma/rational.hpp"

namespace magma {

// A finite Q-linear combination of monomials over one alphabet, stored
// sparsely as (code, coefficient) pairs. Invariants: entries are in
// canonical ascending code order, no coefficient is zero, and all entries
// share the polynomial's alphabet.
class Polynomial {
 public:
  struct Entry {
    MonomialCode code;
    Rational coeff;
  };

  static Polynomial zero(AlphabetRef alphabet);
  static Polynomial monomial(AlphabetRef alphabet, MonomialCode code, Rational coeff = 1);
  // Sorts, merges equal codes, and drops zero coefficients.
  static Polynomial from_entries(AlphabetRef alphabet, std::vector<Entry> entries);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t term_count() const noexcept { return entries_.size(); }

  // The zero polynomial has no degree.
  std::optional<int> degree() const;
  // Nonzero and concentrated in one degree.
  bool is_homogeneous() const;
  // 0 when the monomial is absent.
  Rational coeff(const MonomialCode& code) const;
  // Smallest monomial present; requires nonzero.
  const MonomialCode& leading_code() const;

  bool operator==(const Polynomial& other) const;

 private:
  Polynomial(AlphabetRef alphabet, std::vector<Entry> entries);

  AlphabetRef alphabet_;
  std::vector<Entry> entries_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& c, const Polynomial& p);
// The bilinear extension of grafting. No cancellation can occur (distinct
// code pairs graft to distinct codes), so the result has exactly
// |p| * |q| terms.
Polynomial mul(const Polynomial& p, const Polynomial& q);

// Projection onto the degree-n homogeneous component.
Polynomial pi_n(const Polynomial& p, int n);
// Sum of the components; degrees with zero component are absent.
std::map<int, Polynomial> homogeneous_components(const Polynomial& p);
// Highest-degree homogeneous component; requires nonzero.
Polynomial leading_form(const Polynomial& p);
// Splits the degree-n component by product type. Shapes with zero
// component are absent.
std::map<Shape, Polynomial> product_type_split(const Polynomial& p, int n);

// p rescaled so all coefficients are coprime integers and the coefficient
// of the LARGEST monomial is positive. Zero stays zero. This is the
// canonical form for relation witnesses.
Polynomial primitive_integer_form(const Polynomial& p);

}  // namespace magma
