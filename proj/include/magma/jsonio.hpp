#pragma once

#include <json.hpp>

#include <string>

#include "magma/independence.hpp"
#include "magma/kurosh.hpp"
#include "magma/oracle.hpp"
#include "magma/textio.hpp"

namespace magma {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

// {"alphabet": [...], "terms": [{"shape": "100", "word": ["z1","z2"],
//   "coeff": "4/1"}, ...]} — terms in canonical order, coefficients always
// "num/den".
Json to_json(const Polynomial& p);

// Accepts a string in the polynomial text grammar or an object as emitted
// by to_json. `alphabet` supplies the symbols for strings and objects
// without their own "alphabet" key; an object carrying one must agree.
Polynomial poly_from_json(const Json& j, const AlphabetRef& alphabet);

Json to_json(const IndependenceVerdict& v);
Json to_json(const FreeGeneratorReport& r);
Json to_json(const OracleReport& r);

// {"alphabet": [...], "polynomials": [entry, ...]}
PolySet polyset_from_json(const Json& j);

// Autodetects the line format vs JSON by the first meaningful byte.
PolySet load_poly_set(const std::string& content);

// dump(2) with a trailing newline; the only serialization the CLI uses.
std::string dump_json(const Json& j);

// Wraps nlohmann parse errors into ParseError.
Json parse_json(const std::string& content);

}  // namespace magma
