#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "magma/polynomial.hpp"

namespace magma {

// Deterministic source for randomized checks: mt19937_64 is fully pinned by
// the standard, so a seed reproduces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  // Uniform in [0, n) without modulo bias.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi], inclusive.
  long long range(long long lo, long long hi);

 private:
  std::mt19937_64 gen_;
};

// Nonzero rational with numerator in [-9,9] and denominator in [1,3].
Rational random_coeff(Rng& rng);
MonomialCode random_code(Rng& rng, const Alphabet& alphabet, int degree);
// 1..max_terms distinct monomials of the given degree.
Polynomial random_homogeneous(Rng& rng, const AlphabetRef& alphabet, int degree, int max_terms);
// Top form of degree exactly `degree`, plus lower noise.
Polynomial random_inhomogeneous(Rng& rng, const AlphabetRef& alphabet, int degree, int max_terms);
// Homogeneous family of one common degree with linearly independent members.
std::vector<Polynomial> random_independent_family(Rng& rng, const AlphabetRef& alphabet,
                                                  int degree, std::size_t size, int max_terms);

struct OracleCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct OracleReport {
  std::uint64_t seed = 0;
  int bound = 0;
  int trials = 0;
  std::vector<std::string> alphabet;
  std::vector<OracleCheck> checks;
  bool all_passed = false;
};

struct SessionConfig {
  AlphabetRef alphabet;
  int bound = 6;
  std::size_t monomial_budget = 1'000'000;
  std::uint64_t seed = 0;
  int trials = 8;
};

// Self-check battery: exhaustive embedding/grafting laws at small degree,
// dimension counts against an independent recurrence, randomized algebra
// laws, sparse-vs-dense rank agreement, fast-path-vs-search agreement, and
// extraction round trips. Deterministic for a fixed config.
OracleReport oracle_suite(const SessionConfig& config);

}  // namespace magma
