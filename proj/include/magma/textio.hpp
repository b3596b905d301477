#pragma once

#include <string>
#include <vector>

#include "magma/polynomial.hpp"
#include "magma/term.hpp"

namespace magma {

// term   := symbol | "(" term "," term ")"
// symbol := [A-Za-z][A-Za-z0-9_]*
Term parse_term(const std::string& text, const AlphabetRef& alphabet);

// poly       := ["+"|"-"] signedterm (("+"|"-") signedterm)*
// signedterm := [rational "*"] term
// rational   := ["-"] int ["/" int]
// There is no unit, so a bare rational is not a polynomial.
Polynomial parse_poly(const std::string& text, const AlphabetRef& alphabet);

std::string to_text(const Term& t);
std::string term_text(const MonomialCode& code, const Alphabet& alphabet);
// Leaf symbols joined by "." — "z2.z3.z1.z4".
std::string word_text(const Word& word, const Alphabet& alphabet);
Word parse_word(const std::string& text, const AlphabetRef& alphabet);

// Canonical ascending-order rendering: " + " / " - " separators, unit
// coefficients omitted, "0" for the zero polynomial. parse_poly round-trips
// it exactly.
std::string to_text(const Polynomial& p);

// A parsed input file: one alphabet, then the polynomials over it.
struct PolySet {
  AlphabetRef alphabet;
  std::vector<Polynomial> polys;
};

// Line format: '#' comments; first meaningful line "alphabet: z1 z2 ...";
// every following meaningful line is one polynomial.
PolySet parse_poly_set(const std::string& content);

}  // namespace magma
