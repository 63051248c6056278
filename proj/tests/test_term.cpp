#include <doctest.h>

#include "placid/term.hpp"

using namespace placid;

TEST_SUITE_BEGIN("term");

TEST_CASE("term and identity parsing") {
  CHECK(parse_term("xyxy").letters == std::vector<VarIndex>{1, 2, 1, 2});
  CHECK(parse_term("x1x2x1").letters == std::vector<VarIndex>{1, 2, 1});
  CHECK(parse_term("zx").letters == std::vector<VarIndex>{3, 1});
  Identity id = parse_identity("xyxy=yxxy");
  CHECK(id.arity() == 2);
  CHECK(to_string(id) == "xyxy=yxxy");
  CHECK_THROWS_AS(parse_identity("xyxy"), std::invalid_argument);
  CHECK_THROWS_AS(parse_identity("xz=zx"), std::invalid_argument);  // y missing
  CHECK_THROWS_AS(parse_term(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_term("ab"), std::invalid_argument);
}

TEST_CASE("substitution") {
  Identity id = parse_identity("xyxy=yxxy");
  std::vector<Word> assign{Word::parse("2"), Word::parse("1")};
  auto [lhs, rhs] = substitute(id, assign);
  CHECK(to_compact_string(lhs) == "2121");
  CHECK(to_compact_string(rhs) == "1221");

  // empty-word assignment collapses the variable
  std::vector<Word> with_empty{Word{}, Word::parse("1")};
  auto [l2, r2] = substitute(parse_identity("xy=yx"), with_empty);
  CHECK(l2 == r2);
  CHECK(to_compact_string(l2) == "1");

  std::vector<Word> xw{Word::parse("12"), Word::parse("3")};
  auto [l3, r3] = substitute(parse_identity("xxyx=xyxx"), xw);
  CHECK(to_compact_string(l3) == "1212312");
  CHECK(to_compact_string(r3) == "1231212");

  CHECK_THROWS_AS(substitute(id, std::vector<Word>{Word::parse("1")}), std::invalid_argument);
}

TEST_CASE("substitution is a homomorphism") {
  std::vector<Word> assign{Word::parse("12"), Word::parse("211"), Word{}};
  Term a = parse_term("xzy");
  Term b = parse_term("yxx");
  Term ab;
  ab.letters = a.letters;
  ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
  CHECK(substitute(ab, assign) == substitute(a, assign) + substitute(b, assign));
}

TEST_SUITE_END();
