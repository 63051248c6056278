#include <doctest.h>

#include "placid/trees.hpp"

using namespace placid;

namespace {
const Word kRunning = Word::parse("3613151265");
}

TEST_SUITE_BEGIN("trees");

TEST_CASE("sylv insertion") {
  BinaryTree t = sylv_insert({}, 5);
  CHECK(to_line(t) == "(5 - -)");
  CHECK(to_line(psylv(Word::parse("12"))) == "(2 (1 - -) -)");
  // duplicates descend left
  CHECK(to_line(psylv(Word::parse("1222"))) == "(2 (2 (2 (1 - -) -) -) -)");
  CHECK(to_line(psylv(Word::parse("2122"))) == "(2 (2 (1 - (2 - -)) -) -)");
}

TEST_CASE("psylv of the running example") {
  BinaryTree t = psylv(kRunning);
  CHECK(to_line(t) == "(5 (2 (1 (1 (1 - -) -) -) (5 (3 (3 - -) -) -)) (6 (6 - -) -))");
  CHECK(is_right_strict(t));
  CHECK(evaluation_of(t) == Evaluation::of(kRunning));
}

TEST_CASE("sylvsharp insertion") {
  CHECK(to_line(sylvsharp_insert({}, 1)) == "(1 - -)");
  CHECK(to_line(psylvsharp(Word::parse("21"))) == "(2 (1 - -) -)");
  BinaryTree t = psylvsharp(kRunning);
  CHECK(to_line(t) == "(3 (1 - (1 - (1 - (2 - -)))) (6 (3 - (5 - (5 - -))) (6 - -)))");
  CHECK(is_left_strict(t));
}

TEST_CASE("canopy from the definition") {
  CHECK(canopy(BinaryTree{}) == "");
  CHECK(canopy(psylv(Word::parse("5"))) == "");
  // two nodes: only the middle empty subtree remains after dropping the
  // outermost two
  CHECK(canopy(psylv(Word::parse("12"))) == "0");
  CHECK(canopy(psylvsharp(Word::parse("12"))) == "1");
  CHECK(canopy(psylvsharp(kRunning)) == "111011101");
  CHECK(canopy(psylv(kRunning)) == "000100010");
  CHECK(complementary(canopy(psylvsharp(kRunning)), canopy(psylv(kRunning))));
}

TEST_CASE("pbaxt builds a valid twin pair") {
  TwinPair p = pbaxt(kRunning);
  CHECK(p.left_tree == psylvsharp(kRunning));
  CHECK(p.right_tree == psylv(kRunning));
  CHECK(is_valid(p));

  TwinPair small = pbaxt(Word::parse("12"));
  CHECK(to_line(small.left_tree) == "(1 - (2 - -))");
  CHECK(to_line(small.right_tree) == "(2 (1 - -) -)");

  CHECK(pbaxt(Word{}).empty());
}

TEST_CASE("taig insertion") {
  MultiplicityTree t = taig_insert({}, 5);
  CHECK(to_line(t) == "(5^1 - -)");
  CHECK(to_line(taig_insert(std::move(t), 5)) == "(5^2 - -)");
  CHECK(to_line(ptaig(Word::parse("111"))) == "(1^3 - -)");
  CHECK(ptaig(Word::parse("121")) == ptaig(Word::parse("211")));
}

TEST_CASE("ptaig of the running example") {
  MultiplicityTree t = ptaig(kRunning);
  CHECK(to_line(t) == "(5^2 (2^1 (1^3 - -) (3^2 - -)) (6^2 - -))");
  CHECK(is_valid(t));
  CHECK(evaluation_of(t) == Evaluation::of(kRunning));
}

TEST_CASE("insertion adds exactly one leaf labelled a") {
  BinaryTree t = psylv(Word::parse("23131"));
  std::size_t before = t.size();
  BinaryTree u = sylv_insert(t, 2);
  CHECK(u.size() == before + 1);
  // the new node is a leaf: removing one leaf labelled 2 recovers t
  Evaluation eu = evaluation_of(u), et = evaluation_of(t);
  et.counts[2] += 1;
  CHECK(eu == et);
}

TEST_CASE("roots are the end symbols") {
  Word w = Word::parse("3613151265");
  CHECK(psylv(w).root()->label == w.symbols.back());
  CHECK(psylvsharp(w).root()->label == w.symbols.front());
}

TEST_SUITE_END();
