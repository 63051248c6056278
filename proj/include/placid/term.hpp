#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "placid/word.hpp"

namespace placid {

/// 1-based variable index: 1 = x, 2 = y, 3 = z, then x4, x5, ...
using VarIndex = std::uint32_t;

/// Word over variables; the two sides of an identity are terms.
struct Term {
  std::vector<VarIndex> letters;

  Term() = default;
  explicit Term(std::vector<VarIndex> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  VarIndex max_var() const;
  auto operator<=>(const Term&) const = default;
};

/// Formal equality of two terms. Non-trivial iff the sides differ as
/// sequences. Variables must cover 1..arity jointly across both sides.
struct Identity {
  Term lhs, rhs;

  VarIndex arity() const;
  bool trivial() const { return lhs == rhs; }
  auto operator<=>(const Identity&) const = default;
};

std::string var_name(VarIndex i);
Term parse_term(std::string_view text);
/// Parses "LHS=RHS", e.g. "xyxy=yxxy". Checks the variable-range invariant.
Identity parse_identity(std::string_view text);
std::string to_string(const Term& t);
std::string to_string(const Identity& id);

/// Replaces each variable letter by its assigned word and concatenates.
/// `assignment[i]` is the word for variable i+1; missing assignments throw.
Word substitute(const Term& t, std::span<const Word> assignment);
std::pair<Word, Word> substitute(const Identity& id, std::span<const Word> assignment);

}  // namespace placid
