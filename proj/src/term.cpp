#include "placid/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace placid {

VarIndex Term::max_var() const {
  VarIndex m = 0;
  for (VarIndex v : letters) m = std::max(m, v);
  return m;
}

VarIndex Identity::arity() const { return std::max(lhs.max_var(), rhs.max_var()); }

std::string var_name(VarIndex i) {
  switch (i) {
    case 1: return "x";
    case 2: return "y";
    case 3: return "z";
    default: return "x" + std::to_string(i);
  }
}

Term parse_term(std::string_view text) {
  Term t;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'x' && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::uint64_t v = 0;
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffULL) throw std::invalid_argument("variable index out of range");
        ++i;
      }
      if (v < 1) throw std::invalid_argument("variable indices start at 1");
      t.letters.push_back(static_cast<VarIndex>(v));
      continue;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      t.letters.push_back(static_cast<VarIndex>(c - 'x' + 1));
      ++i;
      continue;
    }
    throw std::invalid_argument(std::string("bad variable letter '") + c + "' in term");
  }
  if (t.letters.empty()) throw std::invalid_argument("empty term");
  return t;
}

Identity parse_identity(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("identity must have the form LHS=RHS");
  Identity id{parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
  VarIndex k = id.arity();
  std::vector<bool> seen(k + 1, false);
  for (VarIndex v : id.lhs.letters) seen[v] = true;
  for (VarIndex v : id.rhs.letters) seen[v] = true;
  for (VarIndex v = 1; v <= k; ++v)
    if (!seen[v])
      throw std::invalid_argument("variable " + var_name(v) + " does not occur in identity");
  return id;
}

std::string to_string(const Term& t) {
  std::string out;
  for (VarIndex v : t.letters) out += var_name(v);
  return out;
}

std::string to_string(const Identity& id) {
  return to_string(id.lhs) + "=" + to_string(id.rhs);
}

Word substitute(const Term& t, std::span<const Word> assignment) {
  if (t.max_var() > assignment.size())
    throw std::invalid_argument("missing variable assignment");
  Word out;
  std::size_t n = 0;
  for (VarIndex v : t.letters) n += assignment[v - 1].size();
  out.symbols.reserve(n);
  for (VarIndex v : t.letters) out += assignment[v - 1];
  return out;
}

std::pair<Word, Word> substitute(const Identity& id, std::span<const Word> assignment) {
  return {substitute(id.lhs, assignment), substitute(id.rhs, assignment)};
}

}  // namespace placid
