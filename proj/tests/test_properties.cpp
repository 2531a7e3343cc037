#include <random>

#include "chartfold/cover.hpp"
#include "chartfold/hurwitz.hpp"
#include "chartfold/orient.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chartfold;
using chartfold::testing::random_perm_movie;

TEST_CASE("hurwitz moves preserve product, transitivity and class") {
  std::mt19937 rng(99);
  Transposition opts[3] = {{1, 2}, {1, 3}, {2, 3}};
  for (int trial = 0; trial < 30; ++trial) {
    HurwitzSystem s{3, {}};
    for (int i = 0; i < 4; ++i) s.entries.push_back(opts[rng() % 3]);
    for (int i = 0; i < 20; ++i) {
      int k = (int)(rng() % (s.entries.size() - 1));
      HurwitzSystem t = apply_hurwitz_move(s, k, rng() % 2 == 0);
      CHECK(hs_product(t) == hs_product(s));
      CHECK(hs_is_transitive(t) == hs_is_transitive(s));
      s = t;
    }
  }
}

TEST_CASE("monodromy of a closed movie multiplies to the identity") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = random_perm_movie(rng, degree, 20);
    HurwitzSystem s = extract_hurwitz(m);
    CAPTURE(serialize_movie(m));
    CHECK((int)s.entries.size() == black_count(m));
    CHECK(hs_product(s).is_identity());
  }
}

TEST_CASE("serialization is a bijection on random movies") {
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = random_perm_movie(rng, degree, 20);
    std::string text = serialize_movie(m);
    CHECK(parse_movie(text) == m);
    CHECK(serialize_movie(parse_movie(text)) == text);
  }
}

TEST_CASE("closed-surface euler characteristic is even and bounded") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = random_perm_movie(rng, degree, 20);
    CoverInvariants ci = cover_invariants(m);
    CHECK(ci.euler_closed % 2 == 0);
    CHECK(ci.euler_closed <= 2 * ci.components);
    int genus_sum = 0;
    for (int g : ci.genus_per_component) genus_sum += g;
    CHECK(ci.euler_closed == 2 * ci.components - 2 * genus_sum);
  }
}

TEST_CASE("semi-orientation is idempotent on orientable movies") {
  std::mt19937 rng(41);
  int seen_orientable = 0;
  for (int i = 0; i < 40; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = random_perm_movie(rng, degree, 16);
    ChartMovie s = semi_orient(m);
    if (node_count(s) == 0) {
      ++seen_orientable;
      auto out = orient(m);
      REQUIRE(std::holds_alternative<ChartMovie>(out));
      CHECK(forget_signs(std::get<ChartMovie>(out)) == m);
    }
  }
  CHECK(seen_orientable > 0);
}
