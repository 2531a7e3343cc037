#include "chartfold/hurwitz.hpp"

#include "doctest.h"

using namespace chartfold;

namespace {
HurwitzSystem hs(int degree, std::vector<Transposition> e) {
  return {degree, std::move(e)};
}
}  // namespace

TEST_CASE("product and transitivity") {
  HurwitzSystem s = hs(3, {{1, 2}, {2, 3}});
  CHECK_FALSE(hs_product(s).is_identity());
  CHECK(hs_is_transitive(s));
  CHECK(hs_product(hs(3, {{1, 2}, {1, 2}})).is_identity());
  CHECK_FALSE(hs_is_transitive(hs(3, {{1, 2}, {1, 2}})));
  CHECK_FALSE(hs_is_transitive(hs(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("elementary moves by hand") {
  HurwitzSystem s = hs(3, {{1, 2}, {2, 3}});
  // forward at 0: ((12),(23)) -> ((23), (23)(12)(23)) = ((23),(13))
  auto f = apply_hurwitz_move(s, 0, true);
  CHECK(f == hs(3, {{2, 3}, {1, 3}}));
  // backward at 0: ((12),(23)) -> ((12)(23)(12), (12)) = ((13),(12))
  auto b = apply_hurwitz_move(s, 0, false);
  CHECK(b == hs(3, {{1, 3}, {1, 2}}));
  // moves are mutually inverse
  CHECK(apply_hurwitz_move(f, 0, false) == s);
  CHECK(apply_hurwitz_move(b, 0, true) == s);
  // product is invariant
  CHECK(hs_product(f) == hs_product(s));
  CHECK(hs_product(b) == hs_product(s));
}

TEST_CASE("simultaneous conjugation") {
  HurwitzSystem s = hs(3, {{1, 2}, {2, 3}});
  Permutation g{{2, 3, 1}};  // 1->2, 2->3, 3->1
  auto c = apply_conjugation(s, g);
  // (12) -> (g(1) g(2)) = (23); (23) -> (g(2) g(3)) = (13)
  CHECK(c == hs(3, {{2, 3}, {1, 3}}));
}

TEST_CASE("normal form shape") {
  auto n = normal_form(3, 6);
  CHECK(n == hs(3, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 3}, {1, 3}}));
  auto n4 = normal_form(4, 6);
  CHECK(n4 == hs(4, {{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 4}, {1, 4}}));
  CHECK_THROWS_AS(normal_form(3, 3), invalid_argument);
  CHECK_THROWS_AS(normal_form(4, 2), invalid_argument);
}

TEST_CASE("normalization replays to the normal form") {
  // scramble the normal form with moves and a global relabel
  HurwitzSystem s = normal_form(3, 6);
  s = apply_hurwitz_move(s, 3, true);
  s = apply_hurwitz_move(s, 0, false);
  s = apply_hurwitz_move(s, 2, true);
  s = apply_conjugation(s, Permutation{{3, 1, 2}});
  REQUIRE(hs_product(s).is_identity());
  REQUIRE(hs_is_transitive(s));
  auto r = hc_normalize(s);
  CHECK(r.normal == normal_form(3, 6));
  HurwitzSystem cur = s;
  for (const auto& st : r.steps) cur = apply_step(cur, st);
  CHECK(cur == r.normal);
}

TEST_CASE("normalize rejects bad input") {
  CHECK_THROWS_AS(hc_normalize(hs(3, {{1, 2}, {2, 3}})), invalid_argument);
  CHECK_THROWS_AS(hc_normalize(hs(4, {{1, 2}, {1, 2}, {3, 4}, {3, 4}})),
                  invalid_argument);
}

TEST_CASE("equivalence") {
  HurwitzSystem a = hs(3, {{1, 3}, {1, 3}, {2, 3}, {2, 3}});
  HurwitzSystem b = normal_form(3, 4);
  CHECK(hc_equivalent(a, b));
  CHECK(hc_equivalent(a, a));
}

TEST_CASE("orbit matches brute force at degree 3 length 4") {
  // independent oracle: every transitive identity-product tuple of four
  // transpositions in S3 lies in one class, so the orbit of the normal form
  // is exactly the brute-force enumeration
  std::set<HurwitzSystem> all;
  Transposition opts[3] = {{1, 2}, {1, 3}, {2, 3}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          HurwitzSystem s = hs(3, {opts[a], opts[b], opts[c], opts[d]});
          if (hs_product(s).is_identity() && hs_is_transitive(s))
            all.insert(s);
        }
  auto orbit = hc_orbit_bfs(normal_form(3, 4));
  CHECK(orbit == all);
}

TEST_CASE("system text round trip") {
  HurwitzSystem s = hs(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(hs_to_string(s) == "degree: 3 [(1 2) (2 3) (1 3)]");
  CHECK(parse_hurwitz(hs_to_string(s)) == s);
  CHECK_THROWS_AS(parse_hurwitz("nope"), parse_error);
}
