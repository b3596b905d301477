#pragma once

#include <gmpxx.h>

#include <string>

namespace magma {

// Exact arithmetic over Q. Note mpq_class does NOT canonicalize values
// built from a raw ratio — every ingestion point (parse_rational, the
// random coefficient source) calls canonicalize() itself, and arithmetic
// preserves canonical form. The printers below rely on that.
using Rational = mpq_class;

// "num/den" with the denominator always spelled out; the JSON coefficient
// encoding. fraction_string(2) == "2/1".
std::string fraction_string(const Rational& q);

// "num" or "num/den"; the form used by the polynomial text grammar.
std::string plain_string(const Rational& q);

// Parses int["/"int]. Throws ParseError on junk or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace magma
