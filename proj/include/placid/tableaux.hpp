#pragma once

#include <compare>
#include <string>
#include <vector>

#include "placid/word.hpp"

namespace placid {

/// Rows top first, left-justified. Rows non-decreasing, columns strictly
/// increasing, row lengths weakly decreasing top to bottom.
struct YoungTableau {
  std::vector<std::vector<Symbol>> rows;

  bool empty() const { return rows.empty(); }
  auto operator<=>(const YoungTableau&) const = default;
};

/// Ribbon-shaped tableau: consecutive rows overlap in exactly one column,
/// so the shape is determined by the row contents alone. Row i+1 starts at
/// column offset(i) + len(row i) - 1, directly under the last cell of row i.
struct QuasiRibbonTableau {
  std::vector<std::vector<Symbol>> rows;

  bool empty() const { return rows.empty(); }
  std::vector<std::size_t> offsets() const;
  auto operator<=>(const QuasiRibbonTableau&) const = default;
};

/// Row insertion: bump the leftmost top-row entry strictly greater than `a`.
YoungTableau schensted_insert(YoungTableau t, Symbol a);

/// Append `a` after the rightmost bottom-most entry <= a, gluing the part of
/// the ribbon after that entry below the new cell; if no entry is <= a the
/// whole tableau is glued below a new top-left cell.
QuasiRibbonTableau hypo_insert(QuasiRibbonTableau t, Symbol a);

/// Left-to-right fold of schensted_insert from the empty tableau.
YoungTableau pplac(const Word& w);

/// Left-to-right fold of hypo_insert from the empty tableau.
QuasiRibbonTableau phypo(const Word& w);

bool is_valid(const YoungTableau& t);
bool is_valid(const QuasiRibbonTableau& t);

Evaluation evaluation_of(const YoungTableau& t);
Evaluation evaluation_of(const QuasiRibbonTableau& t);

/// Reading word: bottom row to top row, left to right within each row.
Word row_reading(const YoungTableau& t);

std::string to_line(const YoungTableau& t);
std::string to_line(const QuasiRibbonTableau& t);
std::string to_ascii(const YoungTableau& t);
std::string to_ascii(const QuasiRibbonTableau& t);

}  // namespace placid
