#include "magma/linalg.hpp"

#include <algorithm>

#include "magma/error.hpp"

namespace magma {

namespace {

// One forward sweep: repeatedly cancel the smallest remaining monomial that
// is some row's pivot. Rows keep their support at or above their own pivot,
// so each subtraction only touches positions at or after the current one.
template <typename Rows, typename Pivot, typename Apply>
void sweep(Polynomial& value, const Rows& rows, Pivot pivot_of, Apply apply_row) {
  std::size_t i = 0;
  while (i < value.entries().size()) {
    const MonomialCode& code = value.entries()[i].code;
    auto it = std::lower_bound(rows.begin(), rows.end(), code,
                               [&](const auto& row, const MonomialCode& c) {
                                 return pivot_of(row) < c;
                               });
    if (it != rows.end() && pivot_of(*it) == code) {
      Rational c = value.entries()[i].coeff;
      apply_row(*it, c, value);
    } else {
      ++i;
    }
  }
}

}  // namespace

EchelonBasis::EchelonBasis(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InternalError("echelon basis needs an alphabet");
}

std::vector<MonomialCode> EchelonBasis::pivots() const {
  std::vector<MonomialCode> out;
  out.reserve(rows_.size());
  for (const Polynomial& r : rows_) out.push_back(r.leading_code());
  return out;
}

Polynomial EchelonBasis::reduce(const Polynomial& v) const {
  if (!same_alphabet(v.alphabet(), alphabet_))
    throw HypothesisError("vector lives over a different alphabet than the basis");
  if (v.is_zero()) return v;
  if (!v.is_homogeneous()) throw HypothesisError("slice vectors must be homogeneous");
  if (degree_ && *v.degree() != *degree_)
    throw HypothesisError("vector degree " + std::to_string(*v.degree()) +
                          " does not match basis degree " + std::to_string(*degree_));
  Polynomial r = v;
  sweep(
      r, rows_, [](const Polynomial& row) -> const MonomialCode& { return row.leading_code(); },
      [](const Polynomial& row, const Rational& c, Polynomial& val) {
        val = sub(val, scale(c, row));
      });
  return r;
}

std::optional<Polynomial> EchelonBasis::insert(const Polynomial& v) {
  if (v.is_zero()) return std::nullopt;
  Polynomial r = reduce(v);
  if (r.is_zero()) return std::nullopt;
  r = scale(1 / r.entries().front().coeff, r);
  const MonomialCode& pivot = r.leading_code();
  // Keep the reduced form: clear the new pivot from every existing row.
  for (Polynomial& row : rows_) {
    Rational c = row.coeff(pivot);
    if (c != 0) row = sub(row, scale(c, r));
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Polynomial& row, const MonomialCode& c) {
                                return row.leading_code() < c;
                              });
  rows_.insert(pos, r);
  if (!degree_) degree_ = r.degree();
  return r;
}

bool EchelonBasis::operator==(const EchelonBasis& other) const {
  if (!same_alphabet(alphabet_, other.alphabet_)) return false;
  return rows_ == other.rows_;
}

EchelonBasis echelonize(AlphabetRef alphabet, const std::vector<Polynomial>& vectors) {
  EchelonBasis basis(std::move(alphabet));
  for (const Polynomial& v : vectors) basis.insert(v);
  return basis;
}

ExtendResult extend_basis(const EchelonBasis& core, const std::vector<Polynomial>& candidates) {
  ExtendResult result{core, {}};
  for (const Polynomial& c : candidates) {
    if (auto row = result.basis.insert(c)) result.added.push_back(*row);
  }
  return result;
}

TrackedEliminator::TrackedEliminator(AlphabetRef value_alphabet, AlphabetRef tag_alphabet)
    : value_alphabet_(std::move(value_alphabet)), tag_alphabet_(std::move(tag_alphabet)) {
  if (!value_alphabet_ || !tag_alphabet_) throw InternalError("eliminator needs alphabets");
}

TrackedEliminator::Row TrackedEliminator::reduce(Polynomial value, Polynomial tag) const {
  if (!same_alphabet(value.alphabet(), value_alphabet_) ||
      !same_alphabet(tag.alphabet(), tag_alphabet_))
    throw HypothesisError("eliminator fed vectors over the wrong alphabet");
  sweep(
      value, rows_, [](const Row& row) -> const MonomialCode& { return row.value.leading_code(); },
      [&tag](const Row& row, const Rational& c, Polynomial& val) {
        val = sub(val, scale(c, row.value));
        tag = sub(tag, scale(c, row.tag));
      });
  return Row{std::move(value), std::move(tag)};
}

TrackedEliminator::InsertOutcome TrackedEliminator::insert(Polynomial value, Polynomial tag) {
  Row r = reduce(std::move(value), std::move(tag));
  if (r.value.is_zero()) return {false, std::move(r.tag)};
  Rational inv = 1 / r.value.entries().front().coeff;
  r.value = scale(inv, r.value);
  r.tag = scale(inv, r.tag);
  Polynomial stored_tag = r.tag;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r.value.leading_code(),
                              [](const Row& row, const MonomialCode& c) {
                                return row.value.leading_code() < c;
                              });
  rows_.insert(pos, std::move(r));
  return {true, std::move(stored_tag)};
}

std::vector<Polynomial> reduced_span(AlphabetRef alphabet,
                                     const std::vector<Polynomial>& vectors) {
  std::vector<Polynomial> rows;  // sorted by pivot, forward-echelon
  auto pivot_of = [](const Polynomial& row) -> const MonomialCode& { return row.leading_code(); };
  auto apply = [](const Polynomial& row, const Rational& c, Polynomial& val) {
    val = sub(val, scale(c, row));
  };
  for (const Polynomial& v : vectors) {
    if (!same_alphabet(v.alphabet(), alphabet))
      throw HypothesisError("vector lives over a different alphabet than the span");
    Polynomial r = v;
    sweep(r, rows, pivot_of, apply);
    if (r.is_zero()) continue;
    r = scale(1 / r.entries().front().coeff, r);
    auto pos = std::lower_bound(rows.begin(), rows.end(), r.leading_code(),
                                [](const Polynomial& row, const MonomialCode& c) {
                                  return row.leading_code() < c;
                                });
    rows.insert(pos, std::move(r));
  }
  // Backward pass, largest pivot first: a row's tail may contain pivots of
  // rows inserted after it, which always sit strictly above its own pivot.
  for (std::size_t i = rows.size(); i-- > 0;) {
    Polynomial head = Polynomial::monomial(alphabet, rows[i].leading_code(),
                                           rows[i].entries().front().coeff);
    Polynomial tail = sub(rows[i], head);
    std::vector<Polynomial> later(rows.begin() + static_cast<std::ptrdiff_t>(i) + 1, rows.end());
    sweep(tail, later, pivot_of, apply);
    rows[i] = add(head, tail);
  }
  return rows;
}

}  // namespace magma
