#include <doctest.h>

#include <random>

#include "placid/word.hpp"

using namespace placid;

TEST_SUITE_BEGIN("word");

TEST_CASE("parsing digit strings and comma lists") {
  CHECK(Word::parse("3613151265").symbols ==
        std::vector<Symbol>{3, 6, 1, 3, 1, 5, 1, 2, 6, 5});
  CHECK(Word::parse("12,3,5").symbols == std::vector<Symbol>{12, 3, 5});
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("e").empty());
  CHECK(Word::parse(" 1 , 2 ").symbols == std::vector<Symbol>{1, 2});
  CHECK_THROWS_AS(Word::parse("102"), std::invalid_argument);   // '0' is not a symbol
  CHECK_THROWS_AS(Word::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("0"), std::invalid_argument);
}

TEST_CASE("formatting") {
  Word w = Word::parse("112");
  CHECK(to_string(w) == "1,1,2");
  CHECK(to_compact_string(w) == "112");
  CHECK(to_string(Word{}) == "e");
  CHECK(to_compact_string(Word::parse("12,3")) == "12,3");
}

TEST_CASE("evaluation of the running example") {
  Evaluation e = Evaluation::of(Word::parse("3613151265"));
  CHECK(e.counts == std::map<Symbol, std::uint64_t>{{1, 3}, {2, 1}, {3, 2}, {5, 2}, {6, 2}});
  CHECK(Evaluation::of(Word{}).counts.empty());
  CHECK(Evaluation::of(Word::parse("112")).counts ==
        std::map<Symbol, std::uint64_t>{{1, 2}, {2, 1}});
  CHECK(to_string(e) == "{1:3, 2:1, 3:2, 5:2, 6:2}");
}

TEST_CASE("symbol counts") {
  CHECK(count_symbol(Word::parse("3613151265"), 1) == 3);
  CHECK(count_symbol(Word{}, 5) == 0);
  CHECK(count_symbol(Word::parse("1222"), 2) == 3);
}

TEST_CASE("evaluation is additive over concatenation") {
  std::mt19937 rng(1u);
  std::uniform_int_distribution<int> len(0, 10), sym(1, 6);
  for (int i = 0; i < 300; ++i) {
    Word u, v;
    for (int j = len(rng); j-- > 0;) u.symbols.push_back(static_cast<Symbol>(sym(rng)));
    for (int j = len(rng); j-- > 0;) v.symbols.push_back(static_cast<Symbol>(sym(rng)));
    CHECK(Evaluation::of(u + v) == Evaluation::of(u) + Evaluation::of(v));
    CHECK(Evaluation::of(u).total() == u.size());
  }
}

TEST_SUITE_END();
