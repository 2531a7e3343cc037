#include <stdexcept>
#include <vector>

#include "chartfold/seifert.hpp"

namespace chartfold {

namespace {

// Hump blocks laid out left to right in movie time. A plain block is one
// hump; a double block holds two humps nested, with u the sign of the inner
// letter. The Tmp/T/U kinds are the transient shapes passed through while
// merging, crossing and unmerging.
enum class BK { Plain, TmpA, TmpB, Dbl, T1, T2, U1, U2 };

struct Block {
  BK kind;
  int u = +1;       // sign of the inner letter where applicable
  int humps = 1;    // humps covered (1 or 2)
};

Word wd(std::initializer_list<int> signs) {
  Word w;
  w.kind = Kind::Braid;
  w.degree = 2;
  for (int s : signs) w.letters.push_back({1, s});
  return w;
}

void block_shape(const Block& b, std::vector<ChartEvent>& ev,
                 std::vector<Word>& interior) {
  using ET = EventType;
  auto push = [&](ET t, int p) { ev.push_back({t, p}); };
  int u = b.u;
  switch (b.kind) {
    case BK::Plain:
      push(ET::BlackBirth, 0); push(ET::BlackDeath, 0);
      interior = {wd({-1})};
      break;
    case BK::TmpA:
      push(ET::IIBirth, 0); push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1, +1}), wd({-1})};
      break;
    case BK::TmpB:
      push(ET::BlackBirth, 0); push(ET::BlackBirth, 1); push(ET::IIDeath, 0);
      interior = {wd({-1}), wd({-1, +1})};
      break;
    case BK::Dbl:
      push(ET::BlackBirth, 0); push(ET::BlackBirth, 1);
      push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1}), wd({-1, u}), wd({-1})};
      break;
    case BK::T1:
      push(ET::BlackBirth, 0); push(ET::IIBirth, 1); push(ET::BlackDeath, 2);
      push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1}), wd({-1, u, -u}), wd({-1, u}), wd({-1})};
      break;
    case BK::T2:
      push(ET::BlackBirth, 0); push(ET::IIBirth, 1); push(ET::BlackDeath, 1);
      push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1}), wd({-1, u, -u}), wd({-1, -u}), wd({-1})};
      break;
    case BK::U1:
      push(ET::BlackBirth, 0); push(ET::BlackBirth, 1); push(ET::IIDeath, 0);
      push(ET::IIBirth, 0); push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1}), wd({-1, +1}), wd({}), wd({-1, +1}), wd({-1})};
      break;
    case BK::U2:
      push(ET::BlackBirth, 0); push(ET::BlackDeath, 0); push(ET::IIBirth, 0);
      push(ET::BlackDeath, 1); push(ET::BlackDeath, 0);
      interior = {wd({-1}), wd({}), wd({-1, +1}), wd({-1})};
      break;
  }
}

int block_events(const Block& b) {
  std::vector<ChartEvent> ev;
  std::vector<Word> in;
  block_shape(b, ev, in);
  return (int)ev.size();
}

struct Builder {
  std::vector<Block> blocks;
  Essay essay;

  Builder() {
    essay.degree = 2;
    essay.kind = Kind::Braid;
    essay.charts.push_back(snapshot());
  }

  ChartMovie snapshot() const {
    ChartMovie c;
    c.kind = Kind::Braid;
    c.degree = 2;
    c.slices.push_back(wd({}));
    for (const auto& b : blocks) {
      std::vector<ChartEvent> ev;
      std::vector<Word> interior;
      block_shape(b, ev, interior);
      for (auto& e : ev) c.events.push_back(e);
      for (auto& w : interior) c.slices.push_back(w);
      c.slices.push_back(wd({}));
    }
    return c;
  }

  int start_of(int bi) const {
    int s = 0;
    for (int i = 0; i < bi; ++i) s += block_events(blocks[i]);
    return s;
  }

  void emit(MoveKind k, int site) {
    essay.moves.push_back({k, site});
    essay.charts.push_back(snapshot());
  }

  // index of the block covering hump h (1-based hump numbering)
  int block_of(int h) const {
    int acc = 0;
    for (int i = 0; i < (int)blocks.size(); ++i) {
      acc += blocks[i].humps;
      if (h <= acc) return i;
    }
    throw invalid_argument("hump out of range");
  }

  void add_hump() {
    int site = start_of((int)blocks.size());
    blocks.push_back({BK::Plain});
    emit(MoveKind::OneH, site);
  }

  void merge(int bi) {  // blocks bi, bi+1 both Plain -> one Dbl
    int ls = start_of(bi);
    blocks[bi + 1].kind = BK::TmpA;
    emit(MoveKind::CC, ls + 2);
    blocks[bi].kind = BK::TmpB;
    emit(MoveKind::CC, ls + 1);
    blocks[bi] = {BK::Dbl, +1, 2};
    blocks.erase(blocks.begin() + bi + 1);
    emit(MoveKind::IIs, ls + 2);
  }

  void triple(int bi) {  // crossing on a Dbl block, flips u
    int s = start_of(bi);
    int u = blocks[bi].u;
    blocks[bi].kind = BK::T1;
    emit(MoveKind::CC, s + 1);
    blocks[bi].kind = BK::T2;
    emit(MoveKind::X, s + 2);
    blocks[bi] = {BK::Dbl, -u, 2};
    emit(MoveKind::CC, s + 1);
  }

  void unmerge(int bi) {  // Dbl -> two Plains (needs u = +1)
    if (blocks[bi].u < 0) triple(bi);
    int s = start_of(bi);
    blocks[bi].kind = BK::U1;
    emit(MoveKind::IIs, s + 2);
    blocks[bi].kind = BK::U2;
    emit(MoveKind::CC, s + 1);
    blocks[bi] = {BK::Plain, +1, 1};
    blocks.insert(blocks.begin() + bi + 1, {BK::Plain, +1, 1});
    emit(MoveKind::CC, s + 2);
  }

  // make humps h, h+1 share one Dbl block, unmerging interlopers first
  int ensure_merged(int h) {
    int a = block_of(h), b = block_of(h + 1);
    if (a == b) return a;
    if (blocks[a].kind == BK::Dbl) unmerge(a);
    b = block_of(h + 1);
    if (blocks[b].kind == BK::Dbl) unmerge(b);
    a = block_of(h);
    merge(a);
    return a;
  }

  void crossing_pair(int h) {  // crossing between humps h, h+1
    triple(ensure_merged(h));
  }

  void crossing_within(int h) {  // plat crossing inside hump h
    int a = block_of(h);
    if (blocks[a].kind != BK::Dbl)
      a = ensure_merged(h < (int)total_humps() ? h : h - 1);
    triple(a);
  }

  size_t total_humps() const {
    size_t n = 0;
    for (auto& b : blocks) n += b.humps;
    return n;
  }

  void teardown() {
    while (!blocks.empty()) {
      int bi = (int)blocks.size() - 1;
      int s = start_of(bi);
      if (blocks[bi].kind == BK::Dbl) {
        blocks[bi] = {BK::Plain, +1, 1};
        emit(MoveKind::TwoH, s + 1);
        blocks.pop_back();
        emit(MoveKind::TwoH, s);
      } else {
        blocks.pop_back();
        emit(MoveKind::TwoH, s);
      }
    }
  }
};

}  // namespace

Essay seifert_essay(const Word& beta, int strands, bool plat) {
  if (beta.kind != Kind::Braid)
    throw invalid_argument("seifert_essay needs a braid word");
  if (strands < 1) throw invalid_argument("strands must be positive");
  if (plat && strands % 2 != 0)
    throw invalid_argument("plat closure needs an even strand count");
  for (const auto& l : beta.letters)
    if (l.index < 1 || l.index >= strands)
      throw invalid_argument("braid letter index out of range");

  int humps = plat ? strands / 2 : strands;
  Builder bld;
  for (int i = 0; i < humps; ++i) bld.add_hump();
  for (const auto& l : beta.letters) {
    if (!plat) {
      bld.crossing_pair(l.index);
    } else if (l.index % 2 == 0) {
      bld.crossing_pair(l.index / 2);
    } else {
      bld.crossing_within((l.index + 1) / 2);
    }
  }
  bld.teardown();
  return bld.essay;
}

}  // namespace chartfold
