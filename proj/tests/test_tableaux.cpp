#include <doctest.h>

#include "placid/tableaux.hpp"

using namespace placid;

namespace {
using Rows = std::vector<std::vector<Symbol>>;
const Word kRunning = Word::parse("3613151265");
}  // namespace

TEST_SUITE_BEGIN("tableaux");

TEST_CASE("schensted insertion basics") {
  YoungTableau t = schensted_insert({}, 3);
  CHECK(t.rows == Rows{{3}});
  // 1 bumps 2 into a new row
  CHECK(schensted_insert(YoungTableau{{{2}}}, 1).rows == Rows{{1}, {2}});
}

TEST_CASE("pplac of the running example") {
  YoungTableau t = pplac(kRunning);
  CHECK(t.rows == Rows{{1, 1, 1, 2, 5}, {3, 3, 5, 6}, {6}});
  CHECK(is_valid(t));
  CHECK(evaluation_of(t) == Evaluation::of(kRunning));
}

TEST_CASE("pplac trivia") {
  CHECK(pplac(Word{}).empty());
  CHECK(pplac(Word::parse("112")).rows == Rows{{1, 1, 2}});
}

TEST_CASE("hypo insertion basics") {
  CHECK(hypo_insert({}, 4).rows == Rows{{4}});
  // gluing below when nothing is <= a
  QuasiRibbonTableau t = phypo(Word::parse("212"));
  CHECK(t.rows == Rows{{1}, {2, 2}});
  CHECK(t.offsets() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("phypo of the running example") {
  QuasiRibbonTableau t = phypo(kRunning);
  CHECK(t.rows == Rows{{1, 1, 1, 2}, {3, 3, 5, 5}, {6, 6}});
  CHECK(t.offsets() == std::vector<std::size_t>{0, 3, 6});
  CHECK(is_valid(t));
  CHECK(evaluation_of(t) == Evaluation::of(kRunning));
}

TEST_CASE("phypo short examples") {
  CHECK(phypo(Word::parse("112")).rows == Rows{{1, 1, 2}});
  QuasiRibbonTableau t = phypo(Word::parse("121"));
  CHECK(t.rows == Rows{{1, 1}, {2}});
  CHECK(t.offsets() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("row reading re-inserts to the same tableau") {
  YoungTableau t = pplac(kRunning);
  CHECK(pplac(row_reading(t)) == t);
}

TEST_CASE("ascii rendering follows the figures") {
  CHECK(to_ascii(pplac(kRunning)) == "1 1 1 2 5\n3 3 5 6\n6");
  CHECK(to_ascii(phypo(kRunning)) == "1 1 1 2\n      3 3 5 5\n            6 6");
  CHECK(to_ascii(YoungTableau{}) == "(empty)");
}

TEST_SUITE_END();
