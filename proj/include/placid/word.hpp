#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace placid {

/// A letter of the ordered alphabet {1 < 2 < 3 < ...}. Zero is not a symbol.
using Symbol = std::uint32_t;

/// Finite word over the ordered alphabet. The empty word is permitted and
/// acts as the monoid identity under concatenation.
struct Word {
  std::vector<Symbol> symbols;

  Word() = default;
  explicit Word(std::vector<Symbol> s);

  /// Accepts a digit string ("3613151265", symbols 1-9), a comma-separated
  /// list of positive integers ("12,3,5"), the empty string, or "e" for the
  /// empty word. Throws std::invalid_argument otherwise.
  static Word parse(std::string_view text);

  std::size_t size() const { return symbols.size(); }
  bool empty() const { return symbols.empty(); }
  auto begin() const { return symbols.begin(); }
  auto end() const { return symbols.end(); }

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) {
    lhs += rhs;
    return lhs;
  }
  auto operator<=>(const Word&) const = default;
};

/// Number of occurrences of `a` in `w`.
std::uint64_t count_symbol(const Word& w, Symbol a);

/// Canonical text form: comma-separated symbols; "e" for the empty word.
std::string to_string(const Word& w);

/// Digit-string form when every symbol is <= 9, comma form otherwise.
std::string to_compact_string(const Word& w);

/// Sparse symbol -> count map (the content of a word). Invariant: no zero
/// entries are stored, so equality of maps is equality of evaluations.
struct Evaluation {
  std::map<Symbol, std::uint64_t> counts;

  static Evaluation of(const Word& w);

  std::uint64_t count(Symbol a) const;
  std::uint64_t total() const;

  Evaluation& operator+=(const Evaluation& rhs);
  friend Evaluation operator+(Evaluation lhs, const Evaluation& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool operator==(const Evaluation&) const = default;
};

std::string to_string(const Evaluation& e);

}  // namespace placid
