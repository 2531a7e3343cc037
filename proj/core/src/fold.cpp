#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chartfold/fold.hpp"

namespace chartfold {

namespace {

Letter inv(Letter l) { return {l.index, -l.sign}; }

std::vector<Letter> rev_inv(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

// cancel adjacent mutually inverse letters; returns number of pairs removed
int reduce_letters(std::vector<Letter>& w) {
  std::vector<Letter> out;
  int pairs = 0;
  for (const auto& l : w) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().sign == -l.sign) {
      out.pop_back();
      ++pairs;
    } else {
      out.push_back(l);
    }
  }
  w = std::move(out);
  return pairs;
}

Word word3(const std::vector<Letter>& letters) {
  Word w;
  w.kind = Kind::Braid;
  w.degree = 3;
  w.letters = letters;
  return w;
}

}  // namespace

FoldState initial_state(const ColorVector& coloring) {
  FoldState st;
  for (const auto& c : coloring.colors) {
    FoldStrand s;
    if (c == Transposition{1, 2}) {
      s.core = {1, +1};
    } else if (c == Transposition{2, 3}) {
      s.core = {2, +1};
    } else {
      s.core = {1, +1};
      s.conj = {{2, +1}};
    }
    st.strands.push_back(s);
  }
  return st;
}

Transposition strand_monodromy(const FoldStrand& s) {
  Permutation p = perm_image(word3(s.conj));
  int a = s.core.index == 1 ? 1 : 2;
  int b = s.core.index == 1 ? 2 : 3;
  return make_transposition(p(a), p(b));
}

FoldState braid_step(const FoldState& st, const Letter& letter) {
  int i = letter.index;
  if (i < 1 || i >= (int)st.strands.size())
    throw invalid_argument("braid letter index out of range");
  const FoldStrand& a = st.strands[i - 1];
  const FoldStrand& b = st.strands[i];
  FoldState out = st;
  if (letter.sign > 0) {
    out.strands[i - 1] = b;
    FoldStrand n;
    n.core = a.core;
    n.conj = a.conj;
    for (const auto& l : rev_inv(b.conj)) n.conj.push_back(l);
    n.conj.push_back({b.core.index, +1});
    for (const auto& l : b.conj) n.conj.push_back(l);
    out.strands[i] = n;
  } else {
    FoldStrand n;
    n.core = b.core;
    n.conj = b.conj;
    for (const auto& l : rev_inv(a.conj)) n.conj.push_back(l);
    n.conj.push_back({a.core.index, -1});
    for (const auto& l : a.conj) n.conj.push_back(l);
    out.strands[i - 1] = n;
    out.strands[i] = a;
  }
  return out;
}

namespace {

struct EngineResult {
  FoldStrand strand;
  std::vector<std::string> log;
  int node_pairs = 0;
};

void log_saddles(EngineResult& r, int strand_no, int pairs) {
  for (int i = 0; i < pairs; ++i) {
    std::ostringstream msg;
    msg << "strand " << strand_no << ": saddle cancels v v^-1";
    r.log.push_back(msg.str());
  }
}

EngineResult run_engine(FoldStrand s, int strand_no) {
  EngineResult r;
  auto note = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "strand " << strand_no << ": " << what;
    r.log.push_back(msg.str());
  };
  log_saddles(r, strand_no, reduce_letters(s.conj));
  for (;;) {
    if (s.conj.empty()) break;
    Letter f1 = s.conj.front();
    if (f1.index == s.core.index) {
      s.conj.erase(s.conj.begin());
      note("C-III pulls the black vertex through its own arc");
      continue;
    }
    if (s.conj.size() == 1) {
      if (s.core.index == 2) {
        // canonical (13) oval carries label 2 around a core labeled 1
        s.conj[0] = {2, -f1.sign};
        s.core = {1, s.core.sign};
        note("C-III swap to the canonical oval");
      }
      break;
    }
    Letter f2 = s.conj[1];
    if (f2.index == f1.index) {
      // same sign after reduction: syllable v v needs a node pair
      r.node_pairs++;
      note("node pair converts v v to v v^-1");
      s.conj.erase(s.conj.begin(), s.conj.begin() + 2);
      log_saddles(r, strand_no, reduce_letters(s.conj));
      continue;
    }
    // f2 carries the core label: pull the black vertex across f1
    int x = s.core.index;
    s.core = {f1.index, s.core.sign};
    s.conj[0] = {x, -f1.sign};
    note("C-III pulls the black vertex across the oval");
    if (s.conj[1].sign == f1.sign) {
      note("saddle cancels v v^-1");
    } else {
      r.node_pairs++;
      note("node pair converts v v to v v^-1");
    }
    s.conj.erase(s.conj.begin(), s.conj.begin() + 2);
    log_saddles(r, strand_no, reduce_letters(s.conj));
  }
  r.strand = s;
  return r;
}

// Chart blocks laid out sequentially in movie time: nested label ovals
// around a black core pair, plus transient node-pair markers.
struct EBlock {
  std::vector<Letter> ovals;  // outermost first
  bool has_core = false;
  Letter core{1, +1};
  int markers = 0;
};

void eblock_shape(const EBlock& b, std::vector<ChartEvent>& ev,
                  std::vector<Word>& interior) {
  using ET = EventType;
  int k = (int)b.ovals.size();
  for (int j = 0; j < k; ++j) ev.push_back({ET::IIBirth, j});
  if (b.has_core) {
    ev.push_back({ET::BlackBirth, k});
    for (int p = 0; p < b.markers; ++p) {
      ev.push_back({ET::Node, k});
      ev.push_back({ET::Node, k});
    }
    ev.push_back({ET::BlackDeath, k});
  }
  for (int j = k - 1; j >= 0; --j) ev.push_back({ET::IIDeath, j});

  std::vector<Letter> left, right;
  std::vector<std::vector<Letter>> rising;
  for (int j = 0; j < k; ++j) {
    left.push_back(inv(b.ovals[j]));
    right.insert(right.begin(), b.ovals[j]);
    std::vector<Letter> w = left;
    for (const auto& l : right) w.push_back(l);
    rising.push_back(w);
  }
  interior.clear();
  for (const auto& w : rising) interior.push_back(word3(w));
  if (b.has_core) {
    auto mid = [&](Letter c) {
      std::vector<Letter> w = left;
      w.push_back(c);
      for (const auto& l : right) w.push_back(l);
      return word3(w);
    };
    interior.push_back(mid(b.core));
    for (int p = 0; p < b.markers; ++p) {
      interior.push_back(mid(inv(b.core)));
      interior.push_back(mid(b.core));
    }
    if (k > 0) interior.push_back(word3(rising.back()));
  }
  for (int j = k - 2; j >= 0; --j) interior.push_back(word3(rising[j]));
}

int eblock_events(const EBlock& b) {
  std::vector<ChartEvent> ev;
  std::vector<Word> in;
  eblock_shape(b, ev, in);
  return (int)ev.size();
}

struct Emitter {
  std::vector<EBlock> blocks;
  Essay essay;

  Emitter() {
    essay.degree = 3;
    essay.kind = Kind::Braid;
    essay.charts.push_back(snapshot());
  }

  ChartMovie snapshot() const {
    ChartMovie c;
    c.kind = Kind::Braid;
    c.degree = 3;
    c.slices.push_back(word3({}));
    for (const auto& b : blocks) {
      std::vector<ChartEvent> ev;
      std::vector<Word> interior;
      eblock_shape(b, ev, interior);
      if (ev.empty()) continue;
      for (auto& e : ev) c.events.push_back(e);
      for (auto& w : interior) c.slices.push_back(w);
      c.slices.push_back(word3({}));
    }
    return c;
  }

  int base(int slot) const {
    int s = 0;
    for (int i = 0; i < slot; ++i) s += eblock_events(blocks[i]);
    return s;
  }

  void emit(MoveKind k, int site) {
    essay.moves.push_back({k, site});
    essay.charts.push_back(snapshot());
  }

  void build(int slot, const FoldStrand& s) {
    blocks.insert(blocks.begin() + slot, EBlock{});
    int b = base(slot);
    std::vector<Letter> target(s.conj.rbegin(), s.conj.rend());
    for (int t = 0; t < (int)target.size(); ++t) {
      blocks[slot].ovals.push_back(target[t]);
      emit(MoveKind::IIb, b + t);
    }
    blocks[slot].has_core = true;
    blocks[slot].core = s.core;
    emit(MoveKind::OneH, b + (int)target.size());
  }

  void add_markers(int slot, int pairs) {
    int b = base(slot);
    int k = (int)blocks[slot].ovals.size();
    for (int p = 0; p < pairs; ++p) {
      blocks[slot].markers++;
      emit(MoveKind::XiPlus, b + k + 1);
    }
  }

  void destroy(int slot) {
    int b = base(slot);
    EBlock& blk = blocks[slot];
    int k = (int)blk.ovals.size();
    while (blk.markers > 0) {
      blk.markers--;
      emit(MoveKind::XiMinus, b + k + 1);
    }
    if (blk.has_core) {
      blk.has_core = false;
      emit(MoveKind::TwoH, b + k);
    }
    while (!blk.ovals.empty()) {
      blk.ovals.pop_back();
      emit(MoveKind::IIb, b + (int)blk.ovals.size());
    }
    blocks.erase(blocks.begin() + slot);
  }
};

}  // namespace

SimplifyOutcome simplify_words(const FoldState& st) {
  SimplifyOutcome out;
  out.state = st;
  for (int j = 0; j < (int)st.strands.size(); ++j) {
    EngineResult r = run_engine(st.strands[j], j + 1);
    out.state.strands[j] = r.strand;
    for (auto& l : r.log) out.log.push_back(std::move(l));
    out.node_pairs += r.node_pairs;
  }
  return out;
}

FoldResult fold3(const Word& beta, int strands, const ColorVector& coloring) {
  if (beta.kind != Kind::Braid)
    throw invalid_argument("fold3 needs a braid word");
  if ((int)coloring.colors.size() != strands)
    throw invalid_argument("coloring size must match the strand count");
  if (color_is_constant(coloring))
    throw invalid_argument("coloring must be non-constant");
  for (const auto& l : beta.letters)
    if (l.index < 1 || l.index >= strands)
      throw invalid_argument("braid letter index out of range");
  if (!(color_dynamics(coloring, beta) == coloring))
    throw invalid_argument("coloring is not fixed by the braid closure");

  // recolor once so the first strand carries (12)
  ColorVector cv = coloring;
  if (!(cv.colors.front() == Transposition{1, 2})) {
    Transposition c1 = cv.colors.front();
    for (auto& c : cv.colors) {
      // conjugating the whole vector by c1*(12)'s witness: swap the roles of
      // c1 and (12), which in S3 means exchanging the two via the third
      Transposition t12{1, 2};
      if (c == c1)
        c = t12;
      else if (c == t12)
        c = c1;
    }
  }

  FoldResult res;
  FoldState state = initial_state(cv);
  Emitter em;
  for (int j = 0; j < strands; ++j) {
    em.build(j, state.strands[j]);
    res.move_log.push_back("attach strand " + std::to_string(j + 1));
  }
  for (const auto& l : beta.letters) {
    state = braid_step(state, l);
    int i = l.index - 1;
    for (int s : {i, i + 1}) {
      int cancelled = reduce_letters(state.strands[s].conj);
      for (int c = 0; c < cancelled; ++c)
        res.move_log.push_back("strand " + std::to_string(s + 1) +
                               ": saddle cancels v v^-1");
    }
    res.move_log.push_back("braid letter s" + std::to_string(l.index) +
                           (l.sign > 0 ? "" : "'"));
    em.build(i + 2, state.strands[i]);
    em.build(i + 3, state.strands[i + 1]);
    em.destroy(i);
    em.destroy(i);
  }
  int pairs_total = 0;
  for (int j = 0; j < strands; ++j) {
    EngineResult r = run_engine(state.strands[j], j + 1);
    if (r.strand == state.strands[j]) continue;
    for (auto& msg : r.log) res.move_log.push_back(std::move(msg));
    pairs_total += r.node_pairs;
    if (r.node_pairs > 0) em.add_markers(j, r.node_pairs);
    em.build(j + 1, r.strand);
    em.destroy(j);
    state.strands[j] = r.strand;
  }
  for (int j = strands - 1; j >= 0; --j) {
    em.destroy(j);
    res.move_log.push_back("detach strand " + std::to_string(j + 1));
  }
  res.essay = std::move(em.essay);
  res.node_count = 2 * pairs_total;
  return res;
}

}  // namespace chartfold
