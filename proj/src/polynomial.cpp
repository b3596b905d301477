#include "magma/polynomial.hpp"

#include <algorithm>

#include "magma/error.hpp"

namespace magma {

Polynomial::Polynomial(AlphabetRef alphabet, std::vector<Entry> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
  if (!alphabet_) throw InternalError("polynomial needs an alphabet");
}

Polynomial Polynomial::zero(AlphabetRef alphabet) { return Polynomial(std::move(alphabet), {}); }

Polynomial Polynomial::monomial(AlphabetRef alphabet, MonomialCode code, Rational coeff) {
  for (SymbolIndex s : code.word.letters) {
    if (s >= alphabet->size()) throw HypothesisError("monomial symbol outside the alphabet");
  }
  if (coeff == 0) return zero(std::move(alphabet));
  return Polynomial(std::move(alphabet), {{std::move(code), std::move(coeff)}});
}

Polynomial Polynomial::from_entries(AlphabetRef alphabet, std::vector<Entry> entries) {
  for (const Entry& e : entries) {
    for (SymbolIndex s : e.code.word.letters) {
      if (s >= alphabet->size()) throw HypothesisError("monomial symbol outside the alphabet");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.code < b.code; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (Entry& e : entries) {
    if (!merged.empty() && merged.back().code == e.code)
      merged.back().coeff += e.coeff;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.coeff == 0; });
  return Polynomial(std::move(alphabet), std::move(merged));
}

std::optional<int> Polynomial::degree() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().code.degree();  // canonical order puts the top degree last
}

bool Polynomial::is_homogeneous() const {
  return !entries_.empty() &&
         entries_.front().code.degree() == entries_.back().code.degree();
}

Rational Polynomial::coeff(const MonomialCode& code) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), code,
                             [](const Entry& e, const MonomialCode& c) { return e.code < c; });
  if (it != entries_.end() && it->code == code) return it->coeff;
  return 0;
}

const MonomialCode& Polynomial::leading_code() const {
  if (entries_.empty()) throw HypothesisError("zero polynomial has no leading monomial");
  return entries_.front().code;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_alphabet(alphabet_, other.alphabet_)) return false;
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].code == other.entries_[i].code) ||
        entries_[i].coeff != other.entries_[i].coeff)
      return false;
  }
  return true;
}

namespace {
void require_same_alphabet(const Polynomial& p, const Polynomial& q) {
  if (!same_alphabet(p.alphabet(), q.alphabet()))
    throw HypothesisError("polynomials live over different alphabets");
}
}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) {
  require_same_alphabet(p, q);
  std::vector<Polynomial::Entry> out;
  out.reserve(p.entries().size() + q.entries().size());
  auto i = p.entries().begin(), j = q.entries().begin();
  while (i != p.entries().end() && j != q.entries().end()) {
    auto c = i->code <=> j->code;
    if (c < 0)
      out.push_back(*i++);
    else if (c > 0)
      out.push_back(*j++);
    else {
      Rational s = i->coeff + j->coeff;
      if (s != 0) out.push_back({i->code, std::move(s)});
      ++i, ++j;
    }
  }
  out.insert(out.end(), i, p.entries().end());
  out.insert(out.end(), j, q.entries().end());
  return Polynomial::from_entries(p.alphabet(), std::move(out));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(-1, q)); }

Polynomial scale(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial::zero(p.alphabet());
  std::vector<Polynomial::Entry> out;
  out.reserve(p.entries().size());
  for (const auto& e : p.entries()) out.push_back({e.code, c * e.coeff});
  return Polynomial::from_entries(p.alphabet(), std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  require_same_alphabet(p, q);
  std::vector<Polynomial::Entry> out;
  out.reserve(p.entries().size() * q.entries().size());
  for (const auto& a : p.entries())
    for (const auto& b : q.entries()) out.push_back({graft(a.code, b.code), a.coeff * b.coeff});
  Polynomial r = Polynomial::from_entries(p.alphabet(), std::move(out));
  if (r.term_count() != p.term_count() * q.term_count())
    throw InternalError("product collapsed terms; grafting should be injective");
  return r;
}

Polynomial pi_n(const Polynomial& p, int n) {
  if (n < 1) throw HypothesisError("degree must be positive");
  std::vector<Polynomial::Entry> out;
  for (const auto& e : p.entries())
    if (e.code.degree() == n) out.push_back(e);
  return Polynomial::from_entries(p.alphabet(), std::move(out));
}

std::map<int, Polynomial> homogeneous_components(const Polynomial& p) {
  std::map<int, std::vector<Polynomial::Entry>> parts;
  for (const auto& e : p.entries()) parts[e.code.degree()].push_back(e);
  std::map<int, Polynomial> out;
  for (auto& [d, entries] : parts)
    out.emplace(d, Polynomial::from_entries(p.alphabet(), std::move(entries)));
  return out;
}

Polynomial leading_form(const Polynomial& p) {
  if (p.is_zero()) throw HypothesisError("zero polynomial has no leading form");
  return pi_n(p, *p.degree());
}

std::map<Shape, Polynomial> product_type_split(const Polynomial& p, int n) {
  Polynomial h = pi_n(p, n);
  std::map<Shape, std::vector<Polynomial::Entry>> parts;
  for (const auto& e : h.entries()) parts[e.code.shape].push_back(e);
  std::map<Shape, Polynomial> out;
  for (auto& [s, entries] : parts)
    out.emplace(s, Polynomial::from_entries(p.alphabet(), std::move(entries)));
  return out;
}

Polynomial primitive_integer_form(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& e : p.entries()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.coeff.get_den().get_mpz_t());
  }
  std::vector<Polynomial::Entry> out;
  out.reserve(p.entries().size());
  for (const auto& e : p.entries()) {
    Rational c = e.coeff * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    out.push_back({e.code, std::move(c)});
  }
  bool flip = out.back().coeff < 0;  // largest monomial gets a positive coefficient
  for (auto& e : out) {
    e.coeff /= Rational(num_gcd);
    if (flip) e.coeff = -e.coeff;
  }
  return Polynomial::from_entries(p.alphabet(), std::move(out));
}

}  // namespace magma
