#include "chartfold/svg.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace chartfold;
using chartfold::testing::read_fixture;

TEST_CASE("movie rendering is well formed and deterministic") {
  ChartMovie m = parse_movie(read_fixture("sec32.movie"));
  std::string svg = render_svg(m);
  CHECK(svg.rfind("<svg xmlns=", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // first arc is a bare t1: color of (12)
  CHECK(svg.find("#1f4fd8") != std::string::npos);
  CHECK(render_svg(m) == svg);
}

TEST_CASE("essay rendering stacks charts with move labels") {
  Essay e = parse_essay(read_fixture("mobius.essay"));
  std::string svg = render_svg(e);
  CHECK(svg.rfind("<svg xmlns=", 0) == 0);
  CHECK(svg.find("Xi+") != std::string::npos);
  CHECK(svg.find("2H") != std::string::npos);
  CHECK(render_svg(e) == svg);
}
