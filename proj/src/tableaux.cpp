#include "placid/tableaux.hpp"

#include <algorithm>
#include <cstddef>

namespace placid {

namespace {

std::size_t symbol_width(const std::vector<std::vector<Symbol>>& rows) {
  std::size_t w = 1;
  for (const auto& row : rows)
    for (Symbol a : row) w = std::max(w, std::to_string(a).size());
  return w;
}

std::string cell(Symbol a, std::size_t width) {
  std::string s = std::to_string(a);
  return std::string(width - s.size(), ' ') + s;
}

std::string rows_line(std::string_view tag, const std::vector<std::vector<Symbol>>& rows) {
  std::string out(tag);
  out += '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows[i][j]);
    }
  }
  return out + ']';
}

}  // namespace

YoungTableau schensted_insert(YoungTableau t, Symbol a) {
  Symbol carry = a;
  for (std::size_t i = 0;; ++i) {
    if (i == t.rows.size()) {
      t.rows.push_back({carry});
      break;
    }
    auto& row = t.rows[i];
    if (carry >= row.back()) {
      row.push_back(carry);
      break;
    }
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    std::swap(*it, carry);
  }
  return t;
}

YoungTableau pplac(const Word& w) {
  YoungTableau t;
  for (Symbol a : w) t = schensted_insert(std::move(t), a);
  return t;
}

QuasiRibbonTableau hypo_insert(QuasiRibbonTableau t, Symbol a) {
  if (t.rows.empty()) {
    t.rows.push_back({a});
    return t;
  }
  // Row fronts strictly increase downward, so the row holding the last
  // entry <= a is the last row whose front is <= a.
  std::size_t r = t.rows.size();
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.rows[i].front() <= a) r = i;
  if (r == t.rows.size()) {
    t.rows.insert(t.rows.begin(), {a});
    return t;
  }
  auto& row = t.rows[r];
  auto split = std::upper_bound(row.begin(), row.end(), a);
  std::vector<Symbol> tail(split, row.end());
  row.erase(split, row.end());
  row.push_back(a);
  if (!tail.empty()) t.rows.insert(t.rows.begin() + static_cast<std::ptrdiff_t>(r) + 1, tail);
  return t;
}

QuasiRibbonTableau phypo(const Word& w) {
  QuasiRibbonTableau t;
  for (Symbol a : w) t = hypo_insert(std::move(t), a);
  return t;
}

std::vector<std::size_t> QuasiRibbonTableau::offsets() const {
  std::vector<std::size_t> offs;
  offs.reserve(rows.size());
  std::size_t o = 0;
  for (const auto& row : rows) {
    offs.push_back(o);
    o += row.size() - 1;
  }
  return offs;
}

bool is_valid(const YoungTableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row.empty()) return false;
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (i > 0) {
      const auto& above = t.rows[i - 1];
      if (row.size() > above.size()) return false;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (above[j] >= row[j]) return false;
    }
  }
  return true;
}

bool is_valid(const QuasiRibbonTableau& t) {
  std::map<Symbol, std::size_t> row_of;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row.empty()) return false;
    if (!std::is_sorted(row.begin(), row.end())) return false;
    // overlap column: last of row i strictly above first of row i+1
    if (i + 1 < t.rows.size() && row.back() >= t.rows[i + 1].front()) return false;
    for (Symbol a : row) {
      auto [it, inserted] = row_of.emplace(a, i);
      if (!inserted && it->second != i) return false;
    }
  }
  return true;
}

Evaluation evaluation_of(const YoungTableau& t) {
  Evaluation e;
  for (const auto& row : t.rows)
    for (Symbol a : row) ++e.counts[a];
  return e;
}

Evaluation evaluation_of(const QuasiRibbonTableau& t) {
  Evaluation e;
  for (const auto& row : t.rows)
    for (Symbol a : row) ++e.counts[a];
  return e;
}

Word row_reading(const YoungTableau& t) {
  Word w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
    for (Symbol a : *it) w.symbols.push_back(a);
  return w;
}

std::string to_line(const YoungTableau& t) { return rows_line("Y", t.rows); }

std::string to_line(const QuasiRibbonTableau& t) { return rows_line("Q", t.rows); }

std::string to_ascii(const YoungTableau& t) {
  if (t.empty()) return "(empty)";
  std::size_t w = symbol_width(t.rows);
  std::string out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += '\n';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) out += ' ';
      out += cell(t.rows[i][j], w);
    }
  }
  return out;
}

std::string to_ascii(const QuasiRibbonTableau& t) {
  if (t.empty()) return "(empty)";
  std::size_t w = symbol_width(t.rows);
  auto offs = t.offsets();
  std::string out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) out += '\n';
    out += std::string(offs[i] * (w + 1), ' ');
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) out += ' ';
      out += cell(t.rows[i][j], w);
    }
  }
  return out;
}

}  // namespace placid
