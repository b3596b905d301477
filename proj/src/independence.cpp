#include "magma/independence.hpp"

#include <algorithm>
#include <numeric>

#include "magma/error.hpp"
#include "magma/kernels.hpp"
#include "magma/substitute.hpp"

namespace magma {

const char* to_string(IndependenceStatus s) {
  switch (s) {
    case IndependenceStatus::independent_up_to: return "independent_up_to";
    case IndependenceStatus::dependent: return "dependent";
    case IndependenceStatus::reduced_certified: return "reduced_certified";
  }
  throw InternalError("unknown independence status");
}

namespace {

void require_nonzero(const std::vector<Polynomial>& ps, const char* what) {
  if (ps.empty()) throw HypothesisError(std::string(what) + " must be nonempty");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].is_zero())
      throw HypothesisError(std::string(what) + " contains the zero polynomial (entry " +
                            std::to_string(i + 1) + ")");
  }
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (!same_alphabet(ps[i].alphabet(), ps.front().alphabet()))
      throw HypothesisError(std::string(what) + " mixes alphabets");
  }
}

int max_degree(const std::vector<Polynomial>& ps) {
  int d = 0;
  for (const Polynomial& p : ps) d = std::max(d, *p.degree());
  return d;
}

// X-monomial with coefficient 1.
Polynomial tag_monomial(const AlphabetRef& x, const MonomialCode& code) {
  return Polynomial::monomial(x, code);
}

// Canonical witness: unique reduced representation of the kernel span,
// smallest-pivot row, primitive integer coefficients. Independent of the
// order the kernel vectors were discovered in.
Polynomial canonical_witness(const AlphabetRef& x, const std::vector<Polynomial>& kernel) {
  std::vector<Polynomial> rows = reduced_span(x, kernel);
  if (rows.empty()) throw InternalError("kernel vanished during canonicalization");
  return primitive_integer_form(rows.front());
}

void verify_witness(const Polynomial& witness, const std::vector<Polynomial>& ps) {
  SubstitutionMap map{ps};
  if (!substitute(witness, map).is_zero())
    throw InternalError("emitted witness does not evaluate to zero");
  if (witness.is_zero()) throw InternalError("witness must be nonzero");
}

}  // namespace

std::map<int, EvaluatedClass> enumerate_evaluations(const std::vector<Polynomial>& images,
                                                    int dmax, std::size_t monomial_budget) {
  require_nonzero(images, "image list");
  if (dmax < 1) throw HypothesisError("degree bound must be positive");

  std::vector<int> image_degree;
  image_degree.reserve(images.size());
  for (const Polynomial& p : images) image_degree.push_back(*p.degree());

  // Count the classes before materializing anything; sizes grow fast.
  std::vector<mpz_class> count(static_cast<std::size_t>(dmax) + 1, 0);
  for (int d = 1; d <= dmax; ++d) {
    mpz_class c = std::count(image_degree.begin(), image_degree.end(), d);
    for (int a = 1; a < d; ++a) c += count[a] * count[d - a];
    if (c > static_cast<unsigned long>(monomial_budget))
      throw BudgetError("enumeration class at substituted degree " + std::to_string(d) +
                            " exceeds the monomial budget of " + std::to_string(monomial_budget),
                        c.get_str());
    count[d] = c;
  }

  const AlphabetRef x = Alphabet::indeterminates(images.size());
  std::map<int, EvaluatedClass> classes;
  for (int d = 1; d <= dmax; ++d) {
    EvaluatedClass cls;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (image_degree[i] == d) {
        cls.monomials.push_back(MonomialCode{Shape::leaf(), Word{{static_cast<SymbolIndex>(i)}}});
        cls.values.push_back(images[i]);
      }
    }
    for (int a = 1; a < d; ++a) {
      auto lo = classes.find(a);
      auto hi = classes.find(d - a);
      if (lo == classes.end() || hi == classes.end()) continue;
      const EvaluatedClass& u = lo->second;
      const EvaluatedClass& v = hi->second;
      if (u.monomials.empty() || v.monomials.empty()) continue;
      for (const MonomialCode& mu : u.monomials)
        for (const MonomialCode& mv : v.monomials) cls.monomials.push_back(graft(mu, mv));
      std::vector<Polynomial> products = product_table(u.values, v.values);
      cls.values.insert(cls.values.end(), std::make_move_iterator(products.begin()),
                        std::make_move_iterator(products.end()));
    }
    if (cls.monomials.empty()) continue;
    // Canonical order within the class.
    std::vector<std::size_t> perm(cls.monomials.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t i, std::size_t j) {
      return cls.monomials[i] < cls.monomials[j];
    });
    EvaluatedClass sorted;
    sorted.monomials.reserve(perm.size());
    sorted.values.reserve(perm.size());
    for (std::size_t i : perm) {
      sorted.monomials.push_back(std::move(cls.monomials[i]));
      sorted.values.push_back(std::move(cls.values[i]));
    }
    classes.emplace(d, std::move(sorted));
  }
  return classes;
}

IndependenceVerdict relation_search(const std::vector<Polynomial>& ps, int dmax,
                                    const SearchOptions& options) {
  require_nonzero(ps, "input list");
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (ps[i] == ps[j])
        throw HypothesisError("duplicate inputs (entries " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + ")");
  if (dmax < max_degree(ps))
    throw HypothesisError("dmax " + std::to_string(dmax) +
                          " is below the largest input degree " + std::to_string(max_degree(ps)));

  const AlphabetRef a = ps.front().alphabet();
  const AlphabetRef x = Alphabet::indeterminates(ps.size());
  auto classes = enumerate_evaluations(ps, dmax, options.monomial_budget);

  const bool homogeneous = std::all_of(ps.begin(), ps.end(),
                                       [](const Polynomial& p) { return p.is_homogeneous(); });
  std::vector<Polynomial> kernel;
  if (homogeneous) {
    // Relations split along substituted degree, so each class has its own
    // kernel.
    for (const auto& [d, cls] : classes) {
      TrackedEliminator elim(a, x);
      for (std::size_t i = 0; i < cls.monomials.size(); ++i) {
        auto out = elim.insert(cls.values[i], tag_monomial(x, cls.monomials[i]));
        if (!out.inserted) kernel.push_back(std::move(out.tag));
      }
    }
  } else {
    TrackedEliminator elim(a, x);
    for (const auto& [d, cls] : classes) {
      for (std::size_t i = 0; i < cls.monomials.size(); ++i) {
        auto out = elim.insert(cls.values[i], tag_monomial(x, cls.monomials[i]));
        if (!out.inserted) kernel.push_back(std::move(out.tag));
      }
    }
  }

  if (kernel.empty()) return {IndependenceStatus::independent_up_to, dmax, std::nullopt};
  Polynomial witness = canonical_witness(x, kernel);
  verify_witness(witness, ps);
  return {IndependenceStatus::dependent, dmax, std::move(witness)};
}

IndependenceVerdict same_degree_fast_path(const std::vector<Polynomial>& hs) {
  require_nonzero(hs, "input list");
  for (const Polynomial& h : hs) {
    if (!h.is_homogeneous() || *h.degree() != *hs.front().degree())
      throw HypothesisError("fast path needs homogeneous inputs of one common degree");
  }
  const AlphabetRef x = Alphabet::indeterminates(hs.size());
  TrackedEliminator elim(hs.front().alphabet(), x);
  std::vector<Polynomial> kernel;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    MonomialCode xi{Shape::leaf(), Word{{static_cast<SymbolIndex>(i)}}};
    auto out = elim.insert(hs[i], tag_monomial(x, xi));
    if (!out.inserted) kernel.push_back(std::move(out.tag));
  }
  if (kernel.empty()) {
    // Linear independence in one degree certifies algebraic independence
    // outright; no degree bound attaches to the certificate.
    return {IndependenceStatus::reduced_certified, std::nullopt, std::nullopt};
  }
  Polynomial witness = canonical_witness(x, kernel);
  verify_witness(witness, hs);
  return {IndependenceStatus::dependent, std::nullopt, std::move(witness)};
}

IndependenceVerdict is_reduced(const std::vector<Polynomial>& ps, int dmax,
                               const SearchOptions& options) {
  require_nonzero(ps, "input list");
  if (dmax < max_degree(ps))
    throw HypothesisError("dmax " + std::to_string(dmax) +
                          " is below the largest input degree " + std::to_string(max_degree(ps)));

  const AlphabetRef x = Alphabet::indeterminates(ps.size());
  // Duplicates are dependent outright.
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i] == ps[j]) {
        MonomialCode xi{Shape::leaf(), Word{{static_cast<SymbolIndex>(i)}}};
        MonomialCode xj{Shape::leaf(), Word{{static_cast<SymbolIndex>(j)}}};
        Polynomial witness = sub(tag_monomial(x, xj), tag_monomial(x, xi));
        verify_witness(witness, ps);
        return {IndependenceStatus::dependent, std::nullopt, std::move(witness)};
      }
    }
  }

  std::vector<Polynomial> lfs;
  lfs.reserve(ps.size());
  for (const Polynomial& p : ps) lfs.push_back(leading_form(p));

  bool hypotheses_hold = true;
  for (std::size_t i = 0; i < lfs.size() && hypotheses_hold; ++i)
    for (std::size_t j = i + 1; j < lfs.size(); ++j)
      if (lfs[i] == lfs[j]) {
        hypotheses_hold = false;
        break;
      }

  std::map<int, std::vector<Polynomial>> by_degree;
  if (hypotheses_hold) {
    for (const Polynomial& h : lfs) by_degree[*h.degree()].push_back(h);
    for (const auto& [d, group] : by_degree) {
      if (same_degree_fast_path(group).status != IndependenceStatus::reduced_certified) {
        hypotheses_hold = false;
        break;
      }
    }
  }
  if (hypotheses_hold && by_degree.size() > 1) {
    if (relation_search(lfs, dmax, options).status != IndependenceStatus::independent_up_to)
      hypotheses_hold = false;
  }

  if (hypotheses_hold) {
    // One degree class: the certificate is unconditional. Several classes:
    // the leading forms were only cross-checked up to dmax.
    std::optional<int> bound;
    if (by_degree.size() > 1) bound = dmax;
    return {IndependenceStatus::reduced_certified, bound, std::nullopt};
  }
  return relation_search(ps, dmax, options);
}

}  // namespace magma
