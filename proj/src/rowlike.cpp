#include "placid/rowlike.hpp"

#include <algorithm>
#include <set>

namespace placid {

namespace {

std::string grid_ascii(const std::vector<std::vector<Symbol>>& columns) {
  if (columns.empty()) return "(empty)";
  std::size_t width = 1, depth = 0;
  for (const auto& c : columns) {
    depth = std::max(depth, c.size());
    for (Symbol a : c) width = std::max(width, std::to_string(a).size());
  }
  std::string out;
  for (std::size_t r = 0; r < depth; ++r) {
    if (r) out += '\n';
    std::string line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) line += ' ';
      if (r < columns[c].size()) {
        std::string s = std::to_string(columns[c][r]);
        line += std::string(width - s.size(), ' ') + s;
      } else {
        line += std::string(width, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
  }
  return out;
}

}  // namespace

StalacticTableau stal_insert(StalacticTableau t, Symbol a) {
  for (auto& c : t.columns)
    if (c.symbol == a) {
      ++c.count;
      return t;
    }
  t.columns.insert(t.columns.begin(), {a, 1});
  return t;
}

StalacticTableau pstal(const Word& w) {
  StalacticTableau t;
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it)
    t = stal_insert(std::move(t), *it);
  return t;
}

PSTableau lps_insert(PSTableau t, Symbol a) {
  for (auto& c : t.columns)
    if (c.front() > a) {
      c.insert(c.begin(), a);
      return t;
    }
  t.columns.push_back({a});
  return t;
}

PSTableau rps_insert(PSTableau t, Symbol a) {
  for (auto& c : t.columns)
    if (c.front() >= a) {
      c.insert(c.begin(), a);
      return t;
    }
  t.columns.push_back({a});
  return t;
}

PSTableau plps(const Word& w) {
  PSTableau t{PSFlavor::left, {}};
  for (Symbol a : w) t = lps_insert(std::move(t), a);
  return t;
}

PSTableau prps(const Word& w) {
  PSTableau t{PSFlavor::right, {}};
  for (Symbol a : w) t = rps_insert(std::move(t), a);
  return t;
}

bool is_valid(const StalacticTableau& t) {
  std::set<Symbol> seen;
  for (const auto& c : t.columns) {
    if (c.count < 1) return false;
    if (!seen.insert(c.symbol).second) return false;
  }
  return true;
}

bool is_valid(const PSTableau& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    const auto& c = t.columns[i];
    if (c.empty()) return false;
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (t.flavor == PSFlavor::left && c[j - 1] >= c[j]) return false;
      if (t.flavor == PSFlavor::right && c[j - 1] > c[j]) return false;
    }
    if (i > 0) {
      Symbol prev = t.columns[i - 1].front();
      if (t.flavor == PSFlavor::left && prev > c.front()) return false;
      if (t.flavor == PSFlavor::right && prev >= c.front()) return false;
    }
  }
  return true;
}

Evaluation evaluation_of(const StalacticTableau& t) {
  Evaluation e;
  for (const auto& c : t.columns) e.counts[c.symbol] += c.count;
  return e;
}

Evaluation evaluation_of(const PSTableau& t) {
  Evaluation e;
  for (const auto& c : t.columns)
    for (Symbol a : c) ++e.counts[a];
  return e;
}

std::string to_line(const StalacticTableau& t) {
  std::string out = "S[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(t.columns[i].symbol) + "^" + std::to_string(t.columns[i].count);
  }
  return out + "]";
}

std::string to_line(const PSTableau& t) {
  std::string out = t.flavor == PSFlavor::left ? "L[" : "R[";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < t.columns[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(t.columns[i][j]);
    }
  }
  return out + "]";
}

std::string to_ascii(const StalacticTableau& t) {
  std::vector<std::vector<Symbol>> cols;
  cols.reserve(t.columns.size());
  for (const auto& c : t.columns)
    cols.emplace_back(static_cast<std::size_t>(c.count), c.symbol);
  return grid_ascii(cols);
}

std::string to_ascii(const PSTableau& t) { return grid_ascii(t.columns); }

}  // namespace placid
