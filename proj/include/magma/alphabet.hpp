#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace magma {

using SymbolIndex = std::uint32_t;

// [A-Za-z][A-Za-z0-9_]*
bool is_valid_symbol_name(std::string_view name);

// A finite, explicitly ordered symbol set. The position of a symbol in the
// constructor list fixes every lexicographic comparison for the session, so
// alphabets are immutable and shared by reference.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols);
  // X1..Xn, the indeterminate alphabet used by substitution and relation
  // search.
  static std::shared_ptr<const Alphabet> indeterminates(std::size_t n);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& name(SymbolIndex i) const;
  std::optional<SymbolIndex> find(std::string_view name) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  explicit Alphabet(std::vector<std::string> symbols);

  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolIndex> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

// Same object or equal symbol lists.
bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b);

}  // namespace magma
