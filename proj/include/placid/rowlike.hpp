#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "placid/word.hpp"

namespace placid {

/// Top-aligned columns of repeated symbols; a symbol occupies exactly one
/// column, so each column is stored as (symbol, count).
struct StalacticTableau {
  struct Column {
    Symbol symbol;
    std::uint64_t count;
    auto operator<=>(const Column&) const = default;
  };
  std::vector<Column> columns;

  bool empty() const { return columns.empty(); }
  auto operator<=>(const StalacticTableau&) const = default;
};

enum class PSFlavor { left, right };

/// Patience-sorting tableau: top-aligned columns, each stored top to bottom.
/// left flavor: top row non-decreasing, columns strictly increasing.
/// right flavor: top row strictly increasing, columns non-decreasing.
struct PSTableau {
  PSFlavor flavor = PSFlavor::left;
  std::vector<std::vector<Symbol>> columns;

  bool empty() const { return columns.empty(); }
  auto operator<=>(const PSTableau&) const = default;
};

/// New column (a, 1) prepended when `a` is absent, else its count grows.
StalacticTableau stal_insert(StalacticTableau t, Symbol a);

/// `a` joins the top row when >= every top entry, else it lands on top of
/// the leftmost column whose top entry is strictly greater.
PSTableau lps_insert(PSTableau t, Symbol a);

/// `a` joins the top row when > every top entry, else it lands on top of the
/// leftmost column whose top entry is >= a.
PSTableau rps_insert(PSTableau t, Symbol a);

/// Right-to-left fold of stal_insert from the empty tableau.
StalacticTableau pstal(const Word& w);
/// Left-to-right fold of lps_insert from the empty tableau.
PSTableau plps(const Word& w);
/// Left-to-right fold of rps_insert from the empty tableau.
PSTableau prps(const Word& w);

bool is_valid(const StalacticTableau& t);
bool is_valid(const PSTableau& t);

Evaluation evaluation_of(const StalacticTableau& t);
Evaluation evaluation_of(const PSTableau& t);

std::string to_line(const StalacticTableau& t);
std::string to_line(const PSTableau& t);
std::string to_ascii(const StalacticTableau& t);
std::string to_ascii(const PSTableau& t);

}  // namespace placid
