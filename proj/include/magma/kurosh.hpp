#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "magma/independence.hpp"
#include "magma/linalg.hpp"
#include "magma/polynomial.hpp"

namespace magma {

struct KuroshOptions {
  std::size_t monomial_budget = 1'000'000;
};

// The subalgebra generated by homogeneous elements, presented one degree at
// a time: slice(d) is the reduced basis of its degree-d piece.
struct GradedSubalgebra {
  std::vector<Polynomial> generators;
  std::map<int, EchelonBasis> slices;  // every degree 1..bound is present
  int bound = 0;

  const EchelonBasis& slice(int d) const;
  std::size_t rank(int d) const { return slice(d).rank(); }
};

// Degree-by-degree span DP: slice(d) spans the degree-d generators together
// with all products of lower slices.
GradedSubalgebra graded_slices(const std::vector<Polynomial>& generators, int bound,
                               const KuroshOptions& options = {});

// Single-slice membership oracle; generators of degree above d cannot
// contribute and are ignored.
EchelonBasis subalgebra_membership_slice(const std::vector<Polynomial>& generators, int d,
                                         const KuroshOptions& options = {});

struct FreeGeneratorReport {
  // Seed elements first (verbatim, in the order given), then the extracted
  // generators by degree and pivot.
  std::vector<Polynomial> generators;
  std::vector<int> degrees;  // parallel to generators
  std::vector<std::size_t> seed_indices;
  int bound = 0;
  // Cross-check of the emitted family by the independence engine.
  IndependenceVerdict independence;
  // Whether the emitted family regenerates, degree by degree up to the
  // bound, exactly what it was extracted from (the subalgebra slices, or
  // the truncated leading-form algebra for the lift).
  bool slices_match = false;
};

// Free-generator extraction for homogeneous generators: walks the degrees,
// keeps what the lower-degree generators cannot reach, and certifies the
// result. Optional seed: an independent homogeneous family inside the
// subalgebra that must appear among the generators; every subalgebra
// element of degree up to the largest seed degree must already lie in the
// seed's span-algebra.
FreeGeneratorReport extract_free_generators(const std::vector<Polynomial>& generators, int bound,
                                            const std::vector<Polynomial>& seed = {},
                                            const KuroshOptions& options = {});

// Degree-d reduced bases of the leading-form algebra of the (possibly
// inhomogeneous) generators, computed over elements representable within
// the bound. Elements whose construction passes through intermediate
// degrees above the bound are invisible at this truncation.
std::map<int, EchelonBasis> leading_form_slices(const std::vector<Polynomial>& generators,
                                                int bound, const KuroshOptions& options = {});

// Inhomogeneous route: extract free generators of the truncated
// leading-form algebra and lift each one back to an element with that
// leading form. The lifted family is reduced by construction and is
// certified before being returned.
FreeGeneratorReport lift_leading_forms(const std::vector<Polynomial>& generators, int bound,
                                       const std::vector<Polynomial>& seed = {},
                                       const KuroshOptions& options = {});

}  // namespace magma
