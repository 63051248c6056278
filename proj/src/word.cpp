#include "placid/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace placid {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Symbol parse_symbol(std::string_view tok) {
  tok = trim(tok);
  require(!tok.empty(), "empty symbol in word");
  std::uint64_t v = 0;
  for (char c : tok) {
    require(std::isdigit(static_cast<unsigned char>(c)), "bad symbol '" + std::string(tok) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    require(v <= 0xffffffffULL, "symbol out of range");
  }
  require(v >= 1, "symbols start at 1");
  return static_cast<Symbol>(v);
}

}  // namespace

Word::Word(std::vector<Symbol> s) : symbols(std::move(s)) {
  for (Symbol a : symbols)
    if (a < 1) throw std::invalid_argument("symbols start at 1");
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "e") return {};
  Word w;
  if (text.find(',') == std::string_view::npos &&
      std::all_of(text.begin(), text.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    w.symbols.reserve(text.size());
    for (char c : text) {
      require(c != '0', "digit-string words use symbols 1-9");
      w.symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    w.symbols.push_back(parse_symbol(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

Word& Word::operator+=(const Word& rhs) {
  symbols.insert(symbols.end(), rhs.symbols.begin(), rhs.symbols.end());
  return *this;
}

std::uint64_t count_symbol(const Word& w, Symbol a) {
  return static_cast<std::uint64_t>(std::count(w.begin(), w.end(), a));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.symbols[i]);
  }
  return out;
}

std::string to_compact_string(const Word& w) {
  if (w.empty()) return "e";
  if (std::all_of(w.begin(), w.end(), [](Symbol a) { return a <= 9; })) {
    std::string out;
    out.reserve(w.size());
    for (Symbol a : w) out += static_cast<char>('0' + a);
    return out;
  }
  return to_string(w);
}

Evaluation Evaluation::of(const Word& w) {
  Evaluation e;
  for (Symbol a : w) ++e.counts[a];
  return e;
}

std::uint64_t Evaluation::count(Symbol a) const {
  auto it = counts.find(a);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t Evaluation::total() const {
  std::uint64_t t = 0;
  for (const auto& [a, n] : counts) t += n;
  return t;
}

Evaluation& Evaluation::operator+=(const Evaluation& rhs) {
  for (const auto& [a, n] : rhs.counts) counts[a] += n;
  return *this;
}

std::string to_string(const Evaluation& e) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, n] : e.counts) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(a) + ":" + std::to_string(n);
  }
  return out + "}";
}

}  // namespace placid
