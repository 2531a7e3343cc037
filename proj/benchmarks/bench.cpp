#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "chartfold/cover.hpp"
#include "chartfold/essay.hpp"
#include "chartfold/fold.hpp"
#include "chartfold/hurwitz.hpp"

using namespace chartfold;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void bm_parse_validate_essay(benchmark::State& state) {
  std::string text = slurp("five2.essay");
  for (auto _ : state) {
    Essay e = parse_essay(text);
    auto rep = validate_essay(e);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(bm_parse_validate_essay);

void bm_hc_normalize(benchmark::State& state) {
  HurwitzSystem s = normal_form(3, 6);
  s = apply_hurwitz_move(s, 3, true);
  s = apply_hurwitz_move(s, 0, false);
  s = apply_hurwitz_move(s, 2, true);
  s = apply_conjugation(s, Permutation{{3, 1, 2}});
  for (auto _ : state) {
    auto r = hc_normalize(s);
    benchmark::DoNotOptimize(r.steps.size());
  }
}
BENCHMARK(bm_hc_normalize);

void bm_cell_complex(benchmark::State& state) {
  ChartMovie m = parse_movie(slurp("sec32.movie"));
  for (auto _ : state) {
    auto cc = build_cell_complex(m);
    benchmark::DoNotOptimize(cc.euler());
  }
}
BENCHMARK(bm_cell_complex);

void bm_fold_trefoil(benchmark::State& state) {
  Word beta = parse_word("(s1 s1 s1)", Kind::Braid, 2);
  ColorVector cv{{{1, 2}, {2, 3}}};
  for (auto _ : state) {
    auto r = fold3(beta, 2, cv);
    benchmark::DoNotOptimize(r.node_count);
  }
}
BENCHMARK(bm_fold_trefoil);

}  // namespace

BENCHMARK_MAIN();
