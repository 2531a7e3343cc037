#include "chartfold/seifert.hpp"

#include "doctest.h"

using namespace chartfold;

TEST_CASE("seifert essay of the trefoil closure") {
  Word beta = parse_word("(s1 s1 s1)", Kind::Braid, 2);
  Essay e = seifert_essay(beta, 2);
  CHECK(validate_essay(e).ok());
  CHECK(handle_counts(e) == HandleCounts{2, 2});
  CHECK(e.degree == 2);
  CHECK(essay_node_events(e) == 0);
}

TEST_CASE("seifert essay of the unknot") {
  Word beta = parse_word("()", Kind::Braid, 1);
  Essay e = seifert_essay(beta, 1);
  CHECK(validate_essay(e).ok());
  CHECK(handle_counts(e) == HandleCounts{1, 1});
}

TEST_CASE("plat form of the twist knot bridge presentation") {
  // 2-bridge plat on four strands; two bridges give two humps
  Word beta = parse_word("(s2 s2 s2 s1' s1')", Kind::Braid, 4);
  Essay e = seifert_essay(beta, 4, true);
  CHECK(validate_essay(e).ok());
  CHECK(handle_counts(e) == HandleCounts{2, 2});
}

TEST_CASE("closure on three strands") {
  Word beta = parse_word("(s1 s2' s1 s2')", Kind::Braid, 3);
  Essay e = seifert_essay(beta, 3);
  CHECK(validate_essay(e).ok());
  CHECK(handle_counts(e) == HandleCounts{3, 3});
}

TEST_CASE("input checking") {
  CHECK_THROWS_AS(seifert_essay(parse_word("(t1)", Kind::Perm, 2), 2),
                  invalid_argument);
  CHECK_THROWS_AS(
      seifert_essay(parse_word("(s1)", Kind::Braid, 3), 3, /*plat=*/true),
      invalid_argument);  // odd strand count has no plat form
  CHECK_THROWS_AS(seifert_essay(parse_word("(s1)", Kind::Braid, 2), 0),
                  invalid_argument);
}
