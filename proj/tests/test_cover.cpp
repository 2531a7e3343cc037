#include "chartfold/cover.hpp"

#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace chartfold;
using chartfold::testing::read_fixture;

TEST_CASE("sphere double cover of the disk") {
  // degree 2, two branch points: closed Euler 2*2 - 2 = 2, one sphere
  ChartMovie m = parse_movie(
      "degree: 2\nkind: perm\n[ () --b0+-> (t1) --b0--> () ]\n");
  REQUIRE(validate_movie(m).ok());
  CoverInvariants ci = cover_invariants(m);
  CHECK(ci.components == 1);
  CHECK(ci.euler_closed == 2);
  CHECK(ci.genus_per_component == std::vector<int>{0});
  // closed movies have identity boundary monodromy: one circle per sheet
  CHECK(ci.boundary_circles == 2);

  CellComplex cc = build_cell_complex(m);
  CHECK(cc.base_euler == 2);
  CHECK(cc.components == 1);
  CHECK(cc.euler() == 2);
}

TEST_CASE("disconnected trivial cover") {
  ChartMovie m = empty_movie(Kind::Perm, 3);
  CoverInvariants ci = cover_invariants(m);
  CHECK(ci.components == 3);
  CHECK(ci.euler_closed == 6);  // three spheres
  CHECK(ci.boundary_circles == 3);
  CellComplex cc = build_cell_complex(m);
  CHECK(cc.components == 3);
  CHECK(cc.euler() == 6);
}

TEST_CASE("example movie covers a sphere") {
  ChartMovie m = parse_movie(read_fixture("sec32.movie"));
  CoverInvariants ci = cover_invariants(m);
  // 4 sheets, 6 branch points: chi = 2*4 - 6 = 2
  CHECK(ci.euler_closed == 2);
  CHECK(ci.components == 1);
  CHECK(ci.genus_per_component == std::vector<int>{0});
  CellComplex cc = build_cell_complex(m);
  CHECK(cc.euler() == 2);
  CHECK(cc.components == 1);
}

TEST_CASE("torus from four branch points on two sheets") {
  // (t1)^4: chi = 2*2 - 4 = 0, genus 1
  ChartMovie m = parse_movie(
      "degree: 2\nkind: perm\n"
      "[ () --b0+-> (t1) --b0+-> (t1 t1) --b0+-> (t1 t1 t1) --b0+-> "
      "(t1 t1 t1 t1) --II0--> (t1 t1) --II0--> () ]\n");
  REQUIRE(validate_movie(m).ok());
  CoverInvariants ci = cover_invariants(m);
  CHECK(ci.euler_closed == 0);
  CHECK(ci.components == 1);
  CHECK(ci.genus_per_component == std::vector<int>{1});
  CellComplex cc = build_cell_complex(m);
  CHECK(cc.euler() == 0);
}

TEST_CASE("cell complex agrees with monodromy invariants on random movies") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    int degree = 2 + (int)(rng() % 3);
    ChartMovie m = chartfold::testing::random_perm_movie(rng, degree, 20);
    CoverInvariants ci = cover_invariants(m);
    CellComplex cc = build_cell_complex(m);
    CAPTURE(serialize_movie(m));
    CHECK(ci.euler_closed == 2 * degree - black_count(m));
    CHECK((long long)ci.euler_closed == cc.euler());
    CHECK(ci.components == cc.components);
    auto a = ci.component_orbits;
    auto b = cc.component_sheets;
    for (auto& v : a) std::sort(v.begin(), v.end());
    for (auto& v : b) std::sort(v.begin(), v.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}
