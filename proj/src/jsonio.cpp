#include "magma/jsonio.hpp"

#include "magma/error.hpp"
#include "magma/rational.hpp"

namespace magma {

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& e : p.entries()) {
    Json words = Json::array();
    for (SymbolIndex s : e.code.word.letters) words.push_back(p.alphabet()->name(s));
    terms.push_back(Json{{"shape", e.code.shape.bits()},
                         {"word", std::move(words)},
                         {"coeff", fraction_string(e.coeff)}});
  }
  return Json{{"alphabet", p.alphabet()->symbols()}, {"terms", std::move(terms)}};
}

namespace {

AlphabetRef alphabet_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("'alphabet' must be an array of symbols");
  std::vector<std::string> names;
  for (const Json& s : j) {
    if (!s.is_string()) throw ParseError("alphabet symbols must be strings");
    names.push_back(s.get<std::string>());
  }
  return Alphabet::make(std::move(names));
}

}  // namespace

Polynomial poly_from_json(const Json& j, const AlphabetRef& alphabet) {
  if (j.is_string()) {
    if (!alphabet) throw ParseError("polynomial text needs an alphabet");
    return parse_poly(j.get<std::string>(), alphabet);
  }
  if (!j.is_object()) throw ParseError("polynomial must be a string or an object");
  AlphabetRef a = alphabet;
  if (j.contains("alphabet")) {
    AlphabetRef own = alphabet_from_json(j.at("alphabet"));
    if (a && !same_alphabet(a, own))
      throw ParseError("polynomial alphabet disagrees with the set alphabet");
    a = own;
  }
  if (!a) throw ParseError("polynomial object carries no alphabet");
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw ParseError("polynomial object needs a 'terms' array");
  std::vector<Polynomial::Entry> entries;
  for (const Json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("shape") || !t.contains("word") || !t.contains("coeff"))
      throw ParseError("each term needs 'shape', 'word' and 'coeff'");
    Shape shape = Shape::from_bits(t.at("shape").get<std::string>());
    Word word;
    for (const Json& s : t.at("word")) {
      std::string name = s.get<std::string>();
      auto idx = a->find(name);
      if (!idx) throw ParseError("symbol '" + name + "' is not in the alphabet");
      word.letters.push_back(*idx);
    }
    MonomialCode code = make_code(std::move(shape), std::move(word));
    entries.push_back({std::move(code), parse_rational(t.at("coeff").get<std::string>())});
  }
  return Polynomial::from_entries(a, std::move(entries));
}

Json to_json(const IndependenceVerdict& v) {
  Json out{{"status", to_string(v.status)}};
  out["bound"] = v.bound ? Json(*v.bound) : Json(nullptr);
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

Json to_json(const FreeGeneratorReport& r) {
  Json gens = Json::array();
  for (const Polynomial& g : r.generators) gens.push_back(to_json(g));
  return Json{{"generators", std::move(gens)},
              {"degrees", r.degrees},
              {"seed_indices", r.seed_indices},
              {"bound", r.bound},
              {"certificates",
               Json{{"independence", to_json(r.independence)}, {"slices_match", r.slices_match}}}};
}

Json to_json(const OracleReport& r) {
  Json checks = Json::array();
  for (const OracleCheck& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"seed", r.seed},         {"bound", r.bound},   {"trials", r.trials},
              {"alphabet", r.alphabet}, {"checks", std::move(checks)},
              {"all_passed", r.all_passed}};
}

PolySet polyset_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  if (!j.contains("alphabet")) throw ParseError("input needs an 'alphabet' array");
  AlphabetRef alphabet = alphabet_from_json(j.at("alphabet"));
  PolySet set{alphabet, {}};
  if (j.contains("polynomials")) {
    if (!j.at("polynomials").is_array()) throw ParseError("'polynomials' must be an array");
    for (const Json& p : j.at("polynomials")) set.polys.push_back(poly_from_json(p, alphabet));
  }
  return set;
}

PolySet load_poly_set(const std::string& content) {
  std::size_t b = content.find_first_not_of(" \t\r\n");
  if (b != std::string::npos && content[b] == '{') return polyset_from_json(parse_json(content));
  return parse_poly_set(content);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& content) {
  try {
    return Json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

}  // namespace magma
