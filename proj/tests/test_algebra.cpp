#include "chartfold/algebra.hpp"

#include "doctest.h"

using namespace chartfold;

TEST_CASE("permutation arithmetic") {
  auto t12 = Permutation::transposition(3, 1, 2);
  auto t23 = Permutation::transposition(3, 2, 3);
  // left-to-right composition: (t12.then(t23))(1) = t23(t12(1)) = t23(2) = 3
  auto c = t12.then(t23);
  CHECK(c(1) == 3);
  CHECK(c(2) == 1);
  CHECK(c(3) == 2);
  CHECK(c.then(c.inverse()).is_identity());
  CHECK(c.is_single_cycle());
  CHECK(c.cycle_count() == 1);
  CHECK(Permutation::identity(4).cycle_count() == 4);
}

TEST_CASE("perm image of a word") {
  // t1 t2 t1 and t2 t1 t2 both give the 3-cycle-free involution (1 3)
  Word w = parse_word("(t1 t2 t1)", Kind::Perm, 3);
  Word v = parse_word("(t2 t1 t2)", Kind::Perm, 3);
  CHECK(perm_image(w) == perm_image(v));
  CHECK(perm_image(w)(1) == 3);
  CHECK(perm_image(parse_word("()", Kind::Perm, 3)).is_identity());
}

TEST_CASE("free reduction") {
  Word w = parse_word("(s1 s2 s2' s1' s1)", Kind::Braid, 3);
  CHECK(word_to_string(free_reduce(w)) == "(s1)");
  Word v = parse_word("(s1 s1)", Kind::Braid, 3);
  CHECK(free_reduce(v) == v);
}

TEST_CASE("braid equality via the Artin action") {
  CHECK(braid_equal(parse_word("(s1 s2 s1)", Kind::Braid, 3),
                    parse_word("(s2 s1 s2)", Kind::Braid, 3)));
  CHECK(braid_equal(parse_word("(s1 s3)", Kind::Braid, 4),
                    parse_word("(s3 s1)", Kind::Braid, 4)));
  CHECK_FALSE(braid_equal(parse_word("(s1)", Kind::Braid, 3),
                          parse_word("(s2)", Kind::Braid, 3)));
  CHECK_FALSE(braid_equal(parse_word("(s1)", Kind::Braid, 3),
                          parse_word("(s1')", Kind::Braid, 3)));
  CHECK(braid_equal(parse_word("(s1' s2 s1)", Kind::Braid, 3),
                    parse_word("(s2 s1 s2')", Kind::Braid, 3)));
}

TEST_CASE("closure permutation and knot check") {
  Word tref = parse_word("(s1 s1 s1)", Kind::Braid, 2);
  CHECK(closure_is_knot(tref, 2));
  Word hopf = parse_word("(s1 s1)", Kind::Braid, 2);
  CHECK_FALSE(closure_is_knot(hopf, 2));  // 2-component link
  CHECK(closure_permutation(tref, 2)(1) == 2);
}

TEST_CASE("knot determinants") {
  // Hand oracles via Goeritz forms of standard alternating diagrams.
  // Trefoil: one shaded twist region of 3 crossings, 1x1 Goeritz matrix
  // (3), det 3.
  CHECK(knot_determinant(parse_word("(s1 s1 s1)", Kind::Braid, 2), 2) == 3);
  // Figure eight: rational knot with fraction 2 + 1/2 = 5/2, det 5.
  CHECK(knot_determinant(parse_word("(s1 s2' s1 s2')", Kind::Braid, 3), 3) ==
        5);
  // 5_2: rational knot with fraction 3 + 1/2 = 7/2, det 7.
  CHECK(knot_determinant(parse_word("(s2 s1' s2 s1 s1 s1)", Kind::Braid, 3),
                         3) == 7);
  // 7_4: rational knot with fraction 3 + 1/(1 + 1/3) = 15/4, det 15.
  CHECK(knot_determinant(
            parse_word("(s3 s2' s3 s2 s2 s1' s2 s1 s1)", Kind::Braid, 4), 4) ==
        15);
  // unknot
  CHECK(knot_determinant(parse_word("(s1)", Kind::Braid, 2), 2) == 1);
}

TEST_CASE("alexander polynomial oracles") {
  using V = std::vector<long long>;
  CHECK(alexander_polynomial(parse_word("(s1 s1 s1)", Kind::Braid, 2), 2) ==
        V{1, -1, 1});
  CHECK(alexander_polynomial(parse_word("(s1 s2' s1 s2')", Kind::Braid, 3),
                             3) == V{1, -3, 1});
  CHECK(alexander_polynomial(
            parse_word("(s2 s1' s2 s1 s1 s1)", Kind::Braid, 3), 3) ==
        V{2, -3, 2});
  CHECK(alexander_polynomial(
            parse_word("(s3 s2' s3 s2 s2 s1' s2 s1 s1)", Kind::Braid, 4), 4) ==
        V{4, -7, 4});
}
