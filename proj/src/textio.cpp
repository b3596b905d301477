#include "magma/textio.hpp"

#include <cctype>
#include <sstream>

#include "magma/error.hpp"
#include "magma/rational.hpp"

namespace magma {

namespace {

// Shared cursor for the term/polynomial grammar.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "', found '" + text[pos] + "'", pos);
    ++pos;
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a symbol", pos);
    ++pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  // int["/"int], no sign (signs belong to the polynomial grammar).
  Rational rational() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t den_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == den_start) throw ParseError("expected a denominator", pos);
    }
    try {
      return parse_rational(text.substr(start, pos - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start);
    }
  }

  SymbolIndex lookup(const AlphabetRef& alphabet, const std::string& name, std::size_t at) {
    auto idx = alphabet->find(name);
    if (!idx) throw ParseError("symbol '" + name + "' is not in the alphabet", at);
    return *idx;
  }

  Term term(const AlphabetRef& alphabet) {
    if (peek() == '(') {
      ++pos;
      Term l = term(alphabet);
      expect(',');
      Term r = term(alphabet);
      expect(')');
      return Term::node(l, r);
    }
    std::size_t at = pos;
    return Term::leaf(alphabet, lookup(alphabet, symbol(), at));
  }
};

}  // namespace

Term parse_term(const std::string& text, const AlphabetRef& alphabet) {
  Scanner s{text};
  Term t = s.term(alphabet);
  if (!s.eof()) throw ParseError("trailing characters after term", s.pos);
  return t;
}

Polynomial parse_poly(const std::string& text, const AlphabetRef& alphabet) {
  Scanner s{text};
  std::vector<Polynomial::Entry> entries;
  bool first = true;
  for (;;) {
    bool negative = false;
    if (first) {
      if (s.eof()) throw ParseError("empty polynomial", s.pos);
      if (s.peek() == '+' || s.peek() == '-') {
        negative = s.peek() == '-';
        ++s.pos;
      }
    } else {
      if (s.eof()) break;
      char op = s.peek();
      if (op != '+' && op != '-')
        throw ParseError(std::string("expected '+' or '-', found '") + op + "'", s.pos);
      negative = op == '-';
      ++s.pos;
    }
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      coeff = s.rational();
      s.expect('*');
    }
    if (negative) coeff = -coeff;
    Term t = s.term(alphabet);
    entries.push_back({embed(t), std::move(coeff)});
    first = false;
  }
  return Polynomial::from_entries(alphabet, std::move(entries));
}

std::string to_text(const Term& t) {
  if (t.is_leaf()) return t.alphabet()->name(t.symbol());
  return "(" + to_text(t.left()) + "," + to_text(t.right()) + ")";
}

namespace {
std::string code_text(const std::string& bits, const std::vector<SymbolIndex>& letters,
                      const Alphabet& alphabet, std::size_t& bi, std::size_t& wi) {
  if (bits[bi] == '0') {
    ++bi;
    return alphabet.name(letters[wi++]);
  }
  ++bi;
  std::string l = code_text(bits, letters, alphabet, bi, wi);
  std::string r = code_text(bits, letters, alphabet, bi, wi);
  return "(" + l + "," + r + ")";
}
}  // namespace

std::string term_text(const MonomialCode& code, const Alphabet& alphabet) {
  std::size_t bi = 0, wi = 0;
  return code_text(code.shape.bits(), code.word.letters, alphabet, bi, wi);
}

std::string word_text(const Word& word, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += '.';
    out += alphabet.name(word.letters[i]);
  }
  return out;
}

Word parse_word(const std::string& text, const AlphabetRef& alphabet) {
  Word w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string name = text.substr(start, dot == std::string::npos ? dot : dot - start);
    auto idx = alphabet->find(name);
    if (!idx) throw ParseError("symbol '" + name + "' is not in the alphabet", start);
    w.letters.push_back(*idx);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : p.entries()) {
    Rational mag = abs(e.coeff);
    bool neg = e.coeff < 0;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    if (mag != 1) out << plain_string(mag) << "*";
    out << term_text(e.code, *p.alphabet());
    first = false;
  }
  return out.str();
}

PolySet parse_poly_set(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  AlphabetRef alphabet;
  std::vector<Polynomial> polys;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (!alphabet) {
      if (line.rfind("alphabet:", 0) != 0)
        throw ParseError("input must start with an 'alphabet:' line");
      std::istringstream syms(line.substr(9));
      std::vector<std::string> names;
      std::string name;
      while (syms >> name) names.push_back(name);
      alphabet = Alphabet::make(std::move(names));
      continue;
    }
    polys.push_back(parse_poly(line, alphabet));
  }
  if (!alphabet) throw ParseError("input must start with an 'alphabet:' line");
  return PolySet{std::move(alphabet), std::move(polys)};
}

}  // namespace magma
