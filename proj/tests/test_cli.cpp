#include "chartfold/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"

using namespace chartfold;

namespace {
int run(std::vector<std::string> args) {
  std::vector<const char*> argv{"chartfold"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli((int)argv.size(), argv.data());
}
std::string fx(const char* name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("validate fixtures") {
  CHECK(run({"validate", fx("five2.essay")}) == 0);
  CHECK(run({"validate", fx("mobius.essay")}) == 0);
  CHECK(run({"validate", fx("sec32.movie")}) == 0);
}

TEST_CASE("cover on the example movie") {
  CHECK(run({"cover", fx("sec32.movie")}) == 0);
  CHECK(run({"cover", fx("sec32.movie"), "--json"}) == 0);
}

TEST_CASE("hurwitz verbs accept inline systems") {
  CHECK(run({"hurwitz", "normalize",
             "degree: 3 [(1 2) (1 2) (1 3) (1 3)]"}) == 0);
  CHECK(run({"hurwitz", "equiv", "degree: 3 [(1 3) (1 3) (2 3) (2 3)]",
             "degree: 3 [(1 2) (1 2) (1 3) (1 3)]"}) == 0);
}

TEST_CASE("braid subcommands") {
  CHECK(run({"det", "--braid", "(s1 s1 s1)", "--strands", "2"}) == 0);
  CHECK(run({"color", "--braid", "(s1 s1 s1)", "--strands", "2"}) == 0);
  std::string tmp = "/tmp/chartfold_cli_test.out";
  CHECK(run({"seifert", "--braid", "(s1 s1 s1)", "--strands", "2", "--out",
             tmp}) == 0);
  CHECK(run({"validate", tmp}) == 0);
  CHECK(run({"fold", "--braid", "(s1 s1 s1)", "--strands", "2", "--coloring",
             "(12),(23)", "--out", tmp}) == 0);
  CHECK(run({"validate", tmp}) == 0);
  std::remove(tmp.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}) == 2);
  CHECK(run({"frobnicate"}) == 2);
  CHECK(run({"validate"}) == 2);
  CHECK(run({"validate", "/nonexistent/file"}) == 2);
  CHECK(run({"det", "--braid", "(s1)"}) == 2);             // missing strands
  CHECK(run({"det", "--braid", "(s9)", "--strands", "2"}) == 2);
  CHECK(run({"hurwitz", "normalize", "garbage text"}) == 2);
  CHECK(run({"render", fx("sec32.movie")}) == 2);  // missing --out
}

TEST_CASE("fold of an uncolorable closure fails cleanly") {
  CHECK(run({"fold", "--braid", "(s1)", "--strands", "2"}) == 1);
}
