#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chartfold/movie.hpp"

namespace chartfold::testing {

inline std::string read_fixture(const std::string& name) {
  std::string path = std::string(FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Random closed permutation movie built as a palindrome: a random run of
// births, crossings and whites away from the empty word, then its mirror
// (birth <-> death) back down. Mirrors of crossings and whites are the same
// event at the same site, so the result is legal by construction.
inline ChartMovie random_perm_movie(std::mt19937& rng, int degree,
                                    int max_events) {
  int half = std::uniform_int_distribution<int>(1, max_events / 2)(rng);
  ChartMovie m;
  m.kind = Kind::Perm;
  m.degree = degree;
  Word w{Kind::Perm, degree, {}};
  m.slices.push_back(w);

  auto rletter = [&] {
    return Letter{std::uniform_int_distribution<int>(1, degree - 1)(rng), +1};
  };
  auto apply = [&](ChartEvent e, Word next) {
    m.events.push_back(e);
    w = std::move(next);
    m.slices.push_back(w);
  };

  std::vector<ChartEvent> first;
  for (int step = 0; step < half; ++step) {
    // gather candidates; insertions are always available
    std::vector<std::pair<ChartEvent, Word>> cands;
    for (int p = 0; p <= (int)w.size(); ++p) {
      Word nx = w;
      nx.letters.insert(nx.letters.begin() + p, rletter());
      cands.push_back({{EventType::BlackBirth, p}, nx});
      Word nx2 = w;
      Letter l = rletter();
      nx2.letters.insert(nx2.letters.begin() + p, l);
      nx2.letters.insert(nx2.letters.begin() + p, l);
      cands.push_back({{EventType::IIBirth, p}, nx2});
    }
    for (int p = 0; p + 1 < (int)w.size(); ++p) {
      if (std::abs(w.letters[p].index - w.letters[p + 1].index) >= 2) {
        Word nx = w;
        std::swap(nx.letters[p], nx.letters[p + 1]);
        cands.push_back({{EventType::Crossing, p}, nx});
      }
    }
    for (int p = 0; p + 2 < (int)w.size(); ++p) {
      int i = w.letters[p].index, j = w.letters[p + 1].index;
      if (std::abs(i - j) == 1 && w.letters[p + 2].index == i) {
        Word nx = w;
        nx.letters[p] = {j, +1};
        nx.letters[p + 1] = {i, +1};
        nx.letters[p + 2] = {j, +1};
        cands.push_back({{EventType::White, p}, nx});
      }
    }
    auto& pick =
        cands[std::uniform_int_distribution<size_t>(0, cands.size() - 1)(rng)];
    first.push_back(pick.first);
    apply(pick.first, pick.second);
  }

  for (auto it = first.rbegin(); it != first.rend(); ++it) {
    ChartEvent e = *it;
    Word nx = w;
    switch (e.type) {
      case EventType::BlackBirth:
        e.type = EventType::BlackDeath;
        nx.letters.erase(nx.letters.begin() + e.pos);
        break;
      case EventType::IIBirth:
        e.type = EventType::IIDeath;
        nx.letters.erase(nx.letters.begin() + e.pos,
                         nx.letters.begin() + e.pos + 2);
        break;
      case EventType::Crossing:
        std::swap(nx.letters[e.pos], nx.letters[e.pos + 1]);
        break;
      case EventType::White: {
        int i = nx.letters[e.pos].index, j = nx.letters[e.pos + 1].index;
        nx.letters[e.pos] = {j, +1};
        nx.letters[e.pos + 1] = {i, +1};
        nx.letters[e.pos + 2] = {j, +1};
        break;
      }
      default:
        break;
    }
    apply(e, nx);
  }
  return m;
}

}  // namespace chartfold::testing
