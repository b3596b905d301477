#include "magma/rational.hpp"

#include <cctype>
#include <cstddef>

#include "magma/error.hpp"

namespace magma {

std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string plain_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return fraction_string(q);
}

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(std::string("expected ") + what + " in rational '" + text + "'", i);
    return text.substr(start, i - start);
  };

  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string num = digits("numerator");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits("denominator");
  }
  if (i != text.size()) throw ParseError("trailing characters in rational '" + text + "'", i);

  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in rational '" + text + "'", 0);
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace magma
