#include "chartfold/orient.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace chartfold;
using chartfold::testing::read_fixture;

TEST_CASE("orienting a simple movie") {
  ChartMovie m = parse_movie(
      "degree: 2\nkind: perm\n[ () --b0+-> (t1) --b0--> () ]\n");
  auto out = orient(m);
  REQUIRE(std::holds_alternative<ChartMovie>(out));
  const ChartMovie& b = std::get<ChartMovie>(out);
  CHECK(validate_movie(b).ok());
  CHECK(b.kind == Kind::Braid);
  CHECK(node_count(b) == 0);
  CHECK(forget_signs(b) == m);
}

TEST_CASE("orienting the example movie") {
  ChartMovie m = parse_movie(read_fixture("sec32.movie"));
  auto out = orient(m);
  ChartMovie s = semi_orient(m);
  CHECK(validate_movie(s).ok());
  CHECK(node_count(s) % 2 == 0);
  if (std::holds_alternative<ChartMovie>(out)) {
    CHECK(node_count(s) == 0);
  } else {
    CHECK(node_count(s) > 0);
    CHECK_FALSE(std::get<Obstruction>(out).white_events.empty());
  }
}

TEST_CASE("orientation consistency on random movies") {
  std::mt19937 rng(23);
  for (int i = 0; i < 40; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = chartfold::testing::random_perm_movie(rng, degree, 20);
    auto out = orient(m);
    ChartMovie s = semi_orient(m);
    CAPTURE(serialize_movie(m));
    CHECK(validate_movie(s).ok());
    CHECK(node_count(s) % 2 == 0);
    bool oriented = std::holds_alternative<ChartMovie>(out);
    CHECK(oriented == (node_count(s) == 0));
    if (oriented) {
      const ChartMovie& b = std::get<ChartMovie>(out);
      CHECK(validate_movie(b).ok());
      CHECK(forget_signs(b) == m);
    }
    CHECK(forget_signs(s) == m);
  }
}
