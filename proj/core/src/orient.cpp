#include "chartfold/orient.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "chartfold/algebra.hpp"

namespace chartfold {
namespace {

// tracks one arc segment per letter slot between events
struct WhiteRec {
  int event;
  std::array<int, 3> in, out;  // segment ids
};

struct Sweep {
  int nseg = 0;
  std::vector<std::vector<int>> grid;  // segment id per slice position
  std::vector<std::pair<int, int>> anti;  // II birth/death partners
  std::vector<WhiteRec> whites;
};

Sweep sweep_movie(const ChartMovie& c) {
  Sweep s;
  std::vector<int> cur;
  auto fresh = [&] { return s.nseg++; };
  s.grid.push_back(cur);
  for (size_t t = 0; t < c.events.size(); ++t) {
    const ChartEvent& e = c.events[t];
    switch (e.type) {
      case EventType::BlackBirth:
        cur.insert(cur.begin() + e.pos, fresh());
        break;
      case EventType::BlackDeath:
        cur.erase(cur.begin() + e.pos);
        break;
      case EventType::IIBirth: {
        int a = fresh(), b = fresh();
        s.anti.push_back({a, b});
        cur.insert(cur.begin() + e.pos, {a, b});
        break;
      }
      case EventType::IIDeath:
        s.anti.push_back({cur[e.pos], cur[e.pos + 1]});
        cur.erase(cur.begin() + e.pos, cur.begin() + e.pos + 2);
        break;
      case EventType::Crossing:
        std::swap(cur[e.pos], cur[e.pos + 1]);
        break;
      case EventType::White: {
        WhiteRec w;
        w.event = (int)t;
        for (int k = 0; k < 3; ++k) w.in[k] = cur[e.pos + k];
        for (int k = 0; k < 3; ++k) cur[e.pos + k] = w.out[k] = fresh();
        s.whites.push_back(w);
        break;
      }
      case EventType::Node:
        break;  // segment continues
    }
    s.grid.push_back(cur);
  }
  return s;
}

struct ParityDSU {
  std::vector<int> parent, par;  // par = parity relative to parent
  explicit ParityDSU(int n) : parent(n), par(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    par[x] ^= p;
    return {r, par[x]};
  }
  bool unite(int a, int b, int rel) {  // rel: 0 equal, 1 opposite
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    par[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// sign-pattern table for s_i^a s_j^b s_i^c = s_j^d s_i^e s_j^f, |i-j| = 1,
// computed once from the faithful equality oracle
bool white_pattern_ok(int a, int b, int c, int d, int e, int f) {
  static const std::array<bool, 64> table = [] {
    std::array<bool, 64> t{};
    for (int m = 0; m < 64; ++m) {
      auto sg = [&](int k) { return (m >> k) & 1 ? -1 : +1; };
      Word u{Kind::Braid, 3, {{1, sg(0)}, {2, sg(1)}, {1, sg(2)}}};
      Word v{Kind::Braid, 3, {{2, sg(3)}, {1, sg(4)}, {2, sg(5)}}};
      t[m] = braid_equal(u, v);
    }
    return t;
  }();
  auto bit = [](int s) { return s < 0 ? 1 : 0; };
  return table[bit(a) | bit(b) << 1 | bit(c) << 2 | bit(d) << 3 |
               bit(e) << 4 | bit(f) << 5];
}

struct Solved {
  ParityDSU dsu;
  std::vector<int> sign;  // per segment, +1/-1
};

// pairwise constraints first (these are always jointly satisfiable for a
// planar movie), then backtracking over the classes the whites touch
std::optional<Solved> solve(const Sweep& s, const ChartMovie& c,
                            std::vector<int>* bad_whites) {
  ParityDSU dsu(s.nseg);
  bool consistent = true;
  for (auto [a, b] : s.anti) consistent &= dsu.unite(a, b, 1);
  for (const auto& w : s.whites) {
    consistent &= dsu.unite(w.in[2], w.out[0], 0);
    consistent &= dsu.unite(w.in[1], w.out[1], 0);
    consistent &= dsu.unite(w.in[0], w.out[2], 0);
  }
  if (!consistent)
    throw invalid_argument("arc sign constraints are pairwise inconsistent");
  std::vector<int> roots;
  for (const auto& w : s.whites)
    for (int seg : w.in) roots.push_back(dsu.find(seg).first);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<int> choice(roots.size(), +1);
  auto root_sign = [&](int root) {
    auto it = std::lower_bound(roots.begin(), roots.end(), root);
    return it != roots.end() && *it == root ? choice[it - roots.begin()] : +1;
  };
  auto seg_sign = [&](int seg) {
    auto [r, p] = dsu.find(seg);
    return root_sign(r) * (p ? -1 : 1);
  };
  auto whites_ok = [&] {
    for (const auto& w : s.whites)
      if (!white_pattern_ok(seg_sign(w.in[0]), seg_sign(w.in[1]),
                            seg_sign(w.in[2]), seg_sign(w.out[0]),
                            seg_sign(w.out[1]), seg_sign(w.out[2])))
        return false;
    return true;
  };
  bool found = false;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (found) return;
    if (k == roots.size()) {
      if (whites_ok()) found = true;
      return;
    }
    for (int v : {+1, -1}) {
      choice[k] = v;
      self(self, k + 1);
      if (found) return;
    }
    choice[k] = +1;
  };
  rec(rec, 0);
  if (!found) {
    if (bad_whites) {
      std::fill(choice.begin(), choice.end(), +1);
      for (const auto& w : s.whites)
        if (!white_pattern_ok(seg_sign(w.in[0]), seg_sign(w.in[1]),
                              seg_sign(w.in[2]), seg_sign(w.out[0]),
                              seg_sign(w.out[1]), seg_sign(w.out[2])))
          bad_whites->push_back(w.event);
    }
    return std::nullopt;
  }
  Solved out{dsu, {}};
  out.sign.resize(s.nseg);
  for (int i = 0; i < s.nseg; ++i) out.sign[i] = seg_sign(i);
  (void)c;
  return out;
}

ChartMovie apply_signs(const ChartMovie& c, const Sweep& s,
                       const std::vector<int>& sign) {
  ChartMovie out;
  out.kind = Kind::Braid;
  out.degree = c.degree;
  out.events = c.events;
  for (size_t t = 0; t < c.slices.size(); ++t) {
    Word w{Kind::Braid, c.degree, {}};
    for (size_t p = 0; p < c.slices[t].size(); ++p)
      w.letters.push_back({c.slices[t].letters[p].index, sign[s.grid[t][p]]});
    out.slices.push_back(std::move(w));
  }
  return out;
}

}  // namespace

OrientOutcome orient(const ChartMovie& c) {
  require_valid(c);
  if (c.kind != Kind::Perm)
    throw invalid_argument("orient expects a permutation movie");
  Sweep s = sweep_movie(c);
  std::vector<int> bad;
  auto solved = solve(s, c, &bad);
  if (!solved) return Obstruction{bad};
  ChartMovie out = apply_signs(c, s, solved->sign);
  require_valid(out);
  return out;
}

ChartMovie semi_orient(const ChartMovie& c) {
  require_valid(c);
  if (c.kind != Kind::Perm)
    throw invalid_argument("semi_orient expects a permutation movie");
  Sweep s = sweep_movie(c);
  std::vector<int> bad;
  auto solved = solve(s, c, &bad);
  if (solved) {
    ChartMovie out = apply_signs(c, s, solved->sign);
    require_valid(out);
    return out;
  }
  // no global flow; take the reference assignment and bracket each failing
  // white vertex with a node pair flipping its middle strand
  ParityDSU dsu(s.nseg);
  for (auto [a, b] : s.anti) dsu.unite(a, b, 1);
  for (const auto& w : s.whites) {
    dsu.unite(w.in[2], w.out[0], 0);
    dsu.unite(w.in[1], w.out[1], 0);
    dsu.unite(w.in[0], w.out[2], 0);
  }
  std::vector<int> sign(s.nseg);
  for (int i = 0; i < s.nseg; ++i) sign[i] = dsu.find(i).second ? -1 : +1;
  ChartMovie base = apply_signs(c, s, sign);
  std::set<int> failing(bad.begin(), bad.end());
  ChartMovie out;
  out.kind = Kind::Braid;
  out.degree = c.degree;
  out.slices.push_back(base.slices.front());
  for (size_t t = 0; t < base.events.size(); ++t) {
    const ChartEvent& e = base.events[t];
    if (e.type == EventType::White && failing.count((int)t)) {
      Word pre = base.slices[t], post = base.slices[t + 1];
      Word pre_f = pre, post_f = post;
      pre_f.letters[e.pos + 1] = pre_f.letters[e.pos + 1].inverse();
      post_f.letters[e.pos + 1] = post_f.letters[e.pos + 1].inverse();
      out.events.push_back({EventType::Node, e.pos + 1});
      out.slices.push_back(pre_f);
      out.events.push_back(e);
      out.slices.push_back(post_f);
      out.events.push_back({EventType::Node, e.pos + 1});
      out.slices.push_back(post);
    } else {
      out.events.push_back(e);
      out.slices.push_back(base.slices[t + 1]);
    }
  }
  require_valid(out);
  return out;
}

}  // namespace chartfold
