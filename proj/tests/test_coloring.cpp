#include "chartfold/coloring.hpp"

#include "doctest.h"

using namespace chartfold;

namespace {
ColorVector cv(std::vector<Transposition> t) { return {std::move(t)}; }
}  // namespace

TEST_CASE("single step by hand") {
  // positive s1 on ((12),(23)): new pair is ((23), (23)(12)(23)) = ((23),(13))
  ColorVector c = cv({{1, 2}, {2, 3}});
  ColorVector r = color_step(c, {1, +1});
  CHECK(r == cv({{2, 3}, {1, 3}}));
  // negative letter undoes the positive one
  CHECK(color_step(r, {1, -1}) == c);
  // equal colors commute past the crossing unchanged
  CHECK(color_step(cv({{1, 2}, {1, 2}}), {1, +1}) == cv({{1, 2}, {1, 2}}));
}

TEST_CASE("dynamics along a word") {
  Word tref = parse_word("(s1 s1 s1)", Kind::Braid, 2);
  ColorVector c = cv({{1, 2}, {2, 3}});
  CHECK(color_dynamics(c, tref) == c);  // fixed by the trefoil closure
  ColorVector bad = cv({{1, 2}, {1, 3}});
  CHECK(color_dynamics(bad, parse_word("(s1)", Kind::Braid, 2)) != bad);
}

TEST_CASE("constant vectors") {
  CHECK(color_is_constant(cv({{1, 2}, {1, 2}, {1, 2}})));
  CHECK_FALSE(color_is_constant(cv({{1, 2}, {2, 3}})));
}

TEST_CASE("trefoil colorings") {
  Word tref = parse_word("(s1 s1 s1)", Kind::Braid, 2);
  auto cols = fox_colorings(tref, 2);
  std::set<ColorVector> expect{cv({{1, 2}, {1, 3}}), cv({{1, 2}, {2, 3}})};
  CHECK(cols == expect);
}

TEST_CASE("determinant controls colorability") {
  // figure eight, det 5: no 3-colorings
  CHECK(fox_colorings(parse_word("(s1 s2' s1 s2')", Kind::Braid, 3), 3)
            .empty());
  // unknot, det 1
  CHECK(fox_colorings(parse_word("(s1)", Kind::Braid, 2), 2).empty());
  // 7_4 presentation, det 15: colorable
  CHECK_FALSE(
      fox_colorings(parse_word("(s3 s2' s3 s2 s2 s1' s2 s1 s1)", Kind::Braid, 4),
                    4)
          .empty());
}

TEST_CASE("color text round trip") {
  ColorVector c = cv({{1, 2}, {2, 3}, {1, 3}});
  CHECK(parse_colors(color_to_string(c)) == c);
  CHECK(parse_colors("(1 2), (2 3)") == cv({{1, 2}, {2, 3}}));
}
