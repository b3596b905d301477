#include "magma/kurosh.hpp"

#include <algorithm>

#include "magma/error.hpp"
#include "magma/kernels.hpp"
#include "magma/textio.hpp"

namespace magma {

namespace {

void require_generators(const std::vector<Polynomial>& gens, const char* what,
                        bool homogeneous_required) {
  if (gens.empty()) throw HypothesisError(std::string(what) + " must be nonempty");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero())
      throw HypothesisError(std::string(what) + " contains the zero polynomial (entry " +
                            std::to_string(i + 1) + ")");
    if (homogeneous_required && !gens[i].is_homogeneous())
      throw HypothesisError(std::string(what) + " must be homogeneous; entry " +
                            std::to_string(i + 1) + " mixes degrees");
    if (!same_alphabet(gens[i].alphabet(), gens.front().alphabet()))
      throw HypothesisError(std::string(what) + " mixes alphabets");
  }
}

int max_degree(const std::vector<Polynomial>& ps) {
  int d = 0;
  for (const Polynomial& p : ps) d = std::max(d, *p.degree());
  return d;
}

// Vectors spanning slice k of the algebra generated by `by_degree` and the
// lower slices in `dp`: the degree-k generators plus every product of
// complementary lower slices. Counts first; slice work explodes quietly.
std::vector<Polynomial> slice_candidates(const std::map<int, std::vector<Polynomial>>& by_degree,
                                         const std::map<int, EchelonBasis>& dp, int k,
                                         std::size_t budget) {
  unsigned long long count = 0;
  auto gens_here = by_degree.find(k);
  if (gens_here != by_degree.end()) count += gens_here->second.size();
  for (int a = 1; a < k; ++a)
    count += static_cast<unsigned long long>(dp.at(a).rank()) * dp.at(k - a).rank();
  if (count > budget)
    throw BudgetError("slice at degree " + std::to_string(k) +
                          " exceeds the monomial budget of " + std::to_string(budget),
                      std::to_string(count));

  std::vector<Polynomial> cand;
  if (gens_here != by_degree.end()) cand = gens_here->second;
  for (int a = 1; a < k; ++a) {
    std::vector<Polynomial> prods = product_table(dp.at(a).rows(), dp.at(k - a).rows());
    cand.insert(cand.end(), std::make_move_iterator(prods.begin()),
                std::make_move_iterator(prods.end()));
  }
  return cand;
}

std::map<int, std::vector<Polynomial>> group_by_degree(const std::vector<Polynomial>& ps) {
  std::map<int, std::vector<Polynomial>> out;
  for (const Polynomial& p : ps) out[*p.degree()].push_back(p);
  return out;
}

}  // namespace

const EchelonBasis& GradedSubalgebra::slice(int d) const {
  auto it = slices.find(d);
  if (it == slices.end())
    throw HypothesisError("degree " + std::to_string(d) + " is outside the computed range");
  return it->second;
}

GradedSubalgebra graded_slices(const std::vector<Polynomial>& generators, int bound,
                               const KuroshOptions& options) {
  require_generators(generators, "generator list", true);
  if (bound < 1) throw HypothesisError("bound must be positive");
  if (max_degree(generators) > bound)
    throw HypothesisError("bound " + std::to_string(bound) +
                          " is below the largest generator degree " +
                          std::to_string(max_degree(generators)));

  GradedSubalgebra s;
  s.generators = generators;
  s.bound = bound;
  const AlphabetRef a = generators.front().alphabet();
  auto by_degree = group_by_degree(generators);
  for (int d = 1; d <= bound; ++d) {
    std::vector<Polynomial> cand =
        slice_candidates(by_degree, s.slices, d, options.monomial_budget);
    s.slices.emplace(d, echelonize(a, cand));
  }
  return s;
}

EchelonBasis subalgebra_membership_slice(const std::vector<Polynomial>& generators, int d,
                                         const KuroshOptions& options) {
  require_generators(generators, "generator list", true);
  if (d < 1) throw HypothesisError("degree must be positive");
  std::vector<Polynomial> usable;
  for (const Polynomial& g : generators)
    if (*g.degree() <= d) usable.push_back(g);
  if (usable.empty()) return EchelonBasis(generators.front().alphabet());
  return graded_slices(usable, d, options).slice(d);
}

FreeGeneratorReport extract_free_generators(const std::vector<Polynomial>& generators, int bound,
                                            const std::vector<Polynomial>& seed,
                                            const KuroshOptions& options) {
  require_generators(generators, "generator list", true);
  if (bound < max_degree(generators))
    throw HypothesisError("bound " + std::to_string(bound) +
                          " is below the largest generator degree " +
                          std::to_string(max_degree(generators)));
  const AlphabetRef a = generators.front().alphabet();
  GradedSubalgebra s = graded_slices(generators, bound, options);
  const SearchOptions search{options.monomial_budget};

  if (!seed.empty()) {
    require_generators(seed, "seed list", true);
    if (!same_alphabet(seed.front().alphabet(), a))
      throw HypothesisError("seed lives over a different alphabet than the generators");
    int smax = max_degree(seed);
    if (smax > bound) throw HypothesisError("seed degree exceeds the bound");
    for (const Polynomial& e : seed) {
      if (!s.slice(*e.degree()).contains(e))
        throw HypothesisError("seed element " + to_text(e) + " lies outside the subalgebra");
    }
    if (is_reduced(seed, bound, search).status != IndependenceStatus::reduced_certified)
      throw HypothesisError("seed family is not algebraically independent");
    // Everything the subalgebra holds at or below the seed's top degree
    // must already come from the seed.
    GradedSubalgebra seed_dp = graded_slices(seed, smax, options);
    for (int d = 1; d <= smax; ++d) {
      for (const Polynomial& row : s.slice(d).rows()) {
        if (!seed_dp.slice(d).contains(row))
          throw HypothesisError("seed hypothesis fails at degree " + std::to_string(d) + ": " +
                                to_text(row) + " is not generated by the seed");
      }
    }
  }

  FreeGeneratorReport report;
  report.bound = bound;
  report.generators = seed;
  for (const Polynomial& e : seed) report.degrees.push_back(*e.degree());
  for (std::size_t i = 0; i < seed.size(); ++i) report.seed_indices.push_back(i);

  auto seed_by_degree = group_by_degree(seed);
  std::map<int, EchelonBasis> dp;  // slices of the algebra on the emitted generators
  bool slices_match = true;
  for (int k = 1; k <= bound; ++k) {
    std::vector<Polynomial> cand =
        slice_candidates(seed_by_degree, dp, k, options.monomial_budget);
    EchelonBasis reachable = echelonize(a, cand);
    ExtendResult ext = extend_basis(reachable, s.slice(k).rows());
    for (Polynomial& r : ext.added) {
      report.generators.push_back(std::move(r));
      report.degrees.push_back(k);
    }
    slices_match = slices_match && ext.basis == s.slice(k);
    dp.emplace(k, std::move(ext.basis));
  }
  report.slices_match = slices_match;

  report.independence = relation_search(report.generators, bound, search);
  if (report.independence.status == IndependenceStatus::dependent)
    throw InternalError("extracted generators failed the independence cross-check: " +
                        to_text(*report.independence.witness));
  return report;
}

namespace {

// Triangularization of every subalgebra element representable within the
// bound, degree by degree. Row values are leading forms, row tags the full
// elements behind them; an element whose top form dies against the stored
// rows cascades into the degree its remainder actually lives in.
class Filtration {
 public:
  Filtration(AlphabetRef alphabet, int bound) : alphabet_(std::move(alphabet)), bound_(bound) {
    for (int d = 1; d <= bound; ++d) t_.emplace(d, TrackedEliminator(alphabet_, alphabet_));
  }

  void insert(Polynomial f) {
    while (!f.is_zero()) {
      int d = *f.degree();
      if (d > bound_) throw InternalError("filtration fed an element above the bound");
      Polynomial top = leading_form(f);
      auto out = t_.at(d).insert(std::move(top), std::move(f));
      if (out.inserted) {
        pool_.push_back(std::move(out.tag));
        return;
      }
      f = std::move(out.tag);  // top form cancelled; strictly lower degree
    }
  }

  bool member(Polynomial f) const {
    while (!f.is_zero()) {
      int d = *f.degree();
      if (d > bound_) return false;
      Polynomial top = leading_form(f);
      auto r = t_.at(d).reduce(std::move(top), std::move(f));
      if (!r.value.is_zero()) return false;
      f = std::move(r.tag);
    }
    return true;
  }

  // An element of the span whose leading form is h.
  Polynomial lift(const Polynomial& h) const {
    auto r = t_.at(*h.degree()).reduce(h, Polynomial::zero(alphabet_));
    if (!r.value.is_zero()) throw InternalError("lift target escapes the leading-form span");
    return scale(-1, r.tag);
  }

  // Keep grafting known elements until the span stops growing; products
  // whose degree would exceed the bound fall outside the truncation.
  void close_under_products(std::size_t budget) {
    std::size_t done = 0;
    while (done < pool_.size()) {
      std::size_t cur = pool_.size();
      unsigned long long fresh_pairs = static_cast<unsigned long long>(cur) * cur -
                                       static_cast<unsigned long long>(done) * done;
      if (fresh_pairs > budget)
        throw BudgetError("leading-form closure exceeds the monomial budget of " +
                              std::to_string(budget),
                          std::to_string(fresh_pairs));
      for (std::size_t i = 0; i < cur; ++i) {
        for (std::size_t j = 0; j < cur; ++j) {
          if (i < done && j < done) continue;
          if (*pool_[i].degree() + *pool_[j].degree() > bound_) continue;
          insert(mul(pool_[i], pool_[j]));
        }
      }
      done = cur;
    }
  }

  const std::vector<TrackedEliminator::Row>& rows(int d) const { return t_.at(d).rows(); }
  int bound() const noexcept { return bound_; }

 private:
  AlphabetRef alphabet_;
  int bound_;
  std::map<int, TrackedEliminator> t_;
  std::vector<Polynomial> pool_;  // stored elements, insertion order
};

struct LeadingFormData {
  Filtration filt;
  std::map<int, EchelonBasis> slices;
};

LeadingFormData build_leading_forms(const std::vector<Polynomial>& generators, int bound,
                                    const KuroshOptions& options) {
  require_generators(generators, "generator list", false);
  if (bound < 1) throw HypothesisError("bound must be positive");
  if (max_degree(generators) > bound)
    throw HypothesisError("bound " + std::to_string(bound) +
                          " is below the largest generator degree " +
                          std::to_string(max_degree(generators)));
  const AlphabetRef a = generators.front().alphabet();

  auto classes = enumerate_evaluations(generators, bound, options.monomial_budget);
  LeadingFormData data{Filtration(a, bound), {}};
  for (const auto& [d, cls] : classes)
    for (const Polynomial& v : cls.values) data.filt.insert(v);
  data.filt.close_under_products(options.monomial_budget);

  for (int d = 1; d <= bound; ++d) {
    std::vector<Polynomial> lfs;
    lfs.reserve(data.filt.rows(d).size());
    for (const auto& row : data.filt.rows(d)) lfs.push_back(row.value);
    data.slices.emplace(d, echelonize(a, lfs));
  }
  return data;
}

}  // namespace

std::map<int, EchelonBasis> leading_form_slices(const std::vector<Polynomial>& generators,
                                                int bound, const KuroshOptions& options) {
  return build_leading_forms(generators, bound, options).slices;
}

FreeGeneratorReport lift_leading_forms(const std::vector<Polynomial>& generators, int bound,
                                       const std::vector<Polynomial>& seed,
                                       const KuroshOptions& options) {
  LeadingFormData data = build_leading_forms(generators, bound, options);
  const AlphabetRef a = generators.front().alphabet();
  const SearchOptions search{options.monomial_budget};

  if (!seed.empty()) {
    require_generators(seed, "seed list", false);
    if (!same_alphabet(seed.front().alphabet(), a))
      throw HypothesisError("seed lives over a different alphabet than the generators");
    int smax = max_degree(seed);
    if (smax > bound) throw HypothesisError("seed degree exceeds the bound");
    for (const Polynomial& e : seed) {
      if (!data.filt.member(e))
        throw HypothesisError("seed element " + to_text(e) +
                              " lies outside the truncated subalgebra");
    }
    if (is_reduced(seed, bound, search).status != IndependenceStatus::reduced_certified)
      throw HypothesisError("seed family is not reduced");
    LeadingFormData seed_data = build_leading_forms(seed, smax, options);
    for (int d = 1; d <= smax; ++d) {
      for (const auto& row : data.filt.rows(d)) {
        if (!seed_data.filt.member(row.tag))
          throw HypothesisError("seed hypothesis fails at degree " + std::to_string(d) + ": " +
                                to_text(row.tag) + " is not generated by the seed");
      }
    }
  }

  FreeGeneratorReport report;
  report.bound = bound;
  report.generators = seed;
  for (const Polynomial& e : seed) report.degrees.push_back(*e.degree());
  for (std::size_t i = 0; i < seed.size(); ++i) report.seed_indices.push_back(i);

  std::vector<Polynomial> seed_lfs;
  seed_lfs.reserve(seed.size());
  for (const Polynomial& e : seed) seed_lfs.push_back(leading_form(e));
  auto lf_by_degree = group_by_degree(seed_lfs);

  std::map<int, EchelonBasis> dp;  // leading-form slices on the emitted family
  bool slices_match = true;
  for (int k = 1; k <= bound; ++k) {
    std::vector<Polynomial> cand = slice_candidates(lf_by_degree, dp, k, options.monomial_budget);
    EchelonBasis reachable = echelonize(a, cand);
    for (const Polynomial& row : reachable.rows()) {
      if (!data.slices.at(k).contains(row))
        throw InternalError("leading-form algebra is not product-closed at degree " +
                            std::to_string(k));
    }
    ExtendResult ext = extend_basis(reachable, data.slices.at(k).rows());
    for (const Polynomial& h : ext.added) {
      report.generators.push_back(data.filt.lift(h));
      report.degrees.push_back(k);
    }
    slices_match = slices_match && ext.basis == data.slices.at(k);
    dp.emplace(k, std::move(ext.basis));
  }
  report.slices_match = slices_match;

  report.independence = is_reduced(report.generators, bound, search);
  if (report.independence.status == IndependenceStatus::dependent)
    throw InternalError("lifted generators failed certification: " +
                        to_text(*report.independence.witness));
  return report;
}

}  // namespace magma
