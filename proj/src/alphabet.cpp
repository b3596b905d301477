#include "magma/alphabet.hpp"

#include <cctype>

#include "magma/error.hpp"

namespace magma {

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ParseError("alphabet must be nonempty");
  for (SymbolIndex i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (!is_valid_symbol_name(s)) throw ParseError("invalid symbol name '" + s + "'");
    if (!index_.emplace(s, i).second) throw ParseError("duplicate symbol '" + s + "' in alphabet");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> symbols) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(symbols)));
}

std::shared_ptr<const Alphabet> Alphabet::indeterminates(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return make(std::move(names));
}

const std::string& Alphabet::name(SymbolIndex i) const {
  if (i >= symbols_.size()) throw InternalError("symbol index out of range");
  return symbols_[i];
}

std::optional<SymbolIndex> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace magma
