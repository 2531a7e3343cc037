#include "chartfold/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chartfold/algebra.hpp"
#include "chartfold/orient.hpp"

namespace chartfold {
namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<std::vector<int>> sheet_orbits(const HurwitzSystem& s) {
  DSU d(s.degree);
  for (const auto& t : s.entries) d.unite(t.a - 1, t.b - 1);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < s.degree; ++i) by_root[d.find(i)].push_back(i + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, sheets] : by_root) out.push_back(std::move(sheets));
  return out;
}

}  // namespace

CoverInvariants cover_invariants(const ChartMovie& c) {
  HurwitzSystem s = extract_hurwitz(c);
  CoverInvariants inv;
  inv.component_orbits = sheet_orbits(s);
  inv.components = (int)inv.component_orbits.size();
  inv.euler_closed = 2 * c.degree - (int)s.entries.size();
  inv.boundary_circles = c.degree;
  for (const auto& orbit : inv.component_orbits) {
    int blacks = 0;
    for (const auto& t : s.entries)
      if (std::find(orbit.begin(), orbit.end(), t.a) != orbit.end()) ++blacks;
    int chi = 2 * (int)orbit.size() - blacks;
    if (chi % 2 != 0 || chi > 2)
      throw invalid_argument("component euler characteristic out of range");
    inv.genus_per_component.push_back((2 - chi) / 2);
  }
  return inv;
}

namespace {

// one face id per complementary region of each slab (region between two
// consecutive slice lines, holding exactly one event)
struct Slab {
  std::vector<int> left_face, right_face;  // per gap index
};

struct BaseEdge {
  int f1, f2;
  int label;  // 0 for edges not on the chart
};

struct BaseVertex {
  int face;                 // one incident face
  std::vector<int> labels;  // incident arc labels in cyclic order
};

struct BaseComplex {
  int nfaces = 0;
  int outer = 0;  // base-point region, sheet indexing lives here
  std::vector<BaseEdge> edges;
  std::vector<BaseVertex> vertices;
};

BaseComplex cellulate(const ChartMovie& c) {
  int s = (int)c.events.size();
  BaseComplex bc;
  std::vector<Slab> slabs(s);
  for (int i = 0; i < s; ++i) {
    const Word& wl = c.slices[i];
    const Word& wr = c.slices[i + 1];
    int Lt = (int)wl.size(), Lr = (int)wr.size();
    int off = Lt + 1;
    DSU d(Lt + 1 + Lr + 1);
    const ChartEvent& e = c.events[i];
    int pos = e.pos;
    auto straight = [&](int lo_skip_from, int lo_skip_to, int shift) {
      // unite left gap k with right gap k (+shift above the event span)
      for (int k = 0; k <= Lt; ++k) {
        if (k > lo_skip_from && k < lo_skip_to) continue;
        int rk = k <= lo_skip_from ? k : k + shift;
        if (rk >= 0 && rk <= Lr) d.unite(k, off + rk);
      }
    };
    switch (e.type) {
      case EventType::BlackBirth:
        straight(pos, pos, 1);
        d.unite(pos, off + pos);
        d.unite(pos, off + pos + 1);
        break;
      case EventType::BlackDeath:
        straight(pos, pos + 1, -1);
        d.unite(pos, off + pos);
        d.unite(pos + 1, off + pos);
        break;
      case EventType::IIBirth:
        straight(pos, pos, 2);
        d.unite(pos, off + pos);
        d.unite(pos, off + pos + 2);
        break;
      case EventType::IIDeath:
        straight(pos, pos + 2, -2);
        d.unite(pos, off + pos);
        d.unite(pos + 2, off + pos);
        break;
      case EventType::Crossing:
        straight(pos, pos + 2, 0);  // middle gaps stay separate
        break;
      case EventType::White:
        straight(pos, pos + 3, 0);
        break;
      case EventType::Node:
        straight(Lt + 1, Lt + 1, 0);
        break;
    }
    // local classes -> global face ids
    std::map<int, int> ids;
    auto face_of = [&](int site) {
      int r = d.find(site);
      auto it = ids.find(r);
      if (it == ids.end()) it = ids.emplace(r, bc.nfaces++).first;
      return it->second;
    };
    slabs[i].left_face.resize(Lt + 1);
    slabs[i].right_face.resize(Lr + 1);
    for (int k = 0; k <= Lt; ++k) slabs[i].left_face[k] = face_of(k);
    for (int k = 0; k <= Lr; ++k) slabs[i].right_face[k] = face_of(off + k);
  }
  int outer = bc.outer = bc.nfaces++;

  // slice-line edges and passing vertices, lines t = 1..s-1
  for (int t = 1; t < s; ++t) {
    int L = (int)c.slices[t].size();
    for (int g = 0; g <= L; ++g)
      bc.edges.push_back({slabs[t - 1].right_face[g], slabs[t].left_face[g], 0});
    for (int r = 0; r < L; ++r) {
      int lab = c.slices[t].letters[r].index;
      bc.vertices.push_back({slabs[t].left_face[r], {lab, lab}});
    }
    // the line's two endpoints on the equator circle
    bc.vertices.push_back({outer, {}});
    bc.vertices.push_back({outer, {}});
  }
  // equator edges: one per slab side plus the two polar caps
  for (int i = 1; i + 1 < s; ++i) {
    bc.edges.push_back({slabs[i].left_face.front(), outer, 0});
    bc.edges.push_back({slabs[i].left_face.back(), outer, 0});
  }
  bc.edges.push_back({slabs[0].right_face.front(), outer, 0});
  bc.edges.push_back({slabs[s - 1].left_face.front(), outer, 0});

  // slab interiors: event vertex plus arc edges
  for (int i = 0; i < s; ++i) {
    const ChartEvent& e = c.events[i];
    const Word& wl = c.slices[i];
    const Word& wr = c.slices[i + 1];
    int pos = e.pos;
    auto lf = [&](int g) { return slabs[i].left_face[g]; };
    auto rf = [&](int g) { return slabs[i].right_face[g]; };
    auto arc = [&](int f1, int f2, int lab) { bc.edges.push_back({f1, f2, lab}); };
    // continuing letters: rows not consumed by the event
    auto continuing = [&](int from, int to) {
      for (int r = 0; r < (int)wl.size(); ++r) {
        if (r >= from && r < to) continue;
        arc(lf(r), lf(r + 1), wl.letters[r].index);
      }
    };
    switch (e.type) {
      case EventType::BlackBirth: {
        int lab = wr.letters[pos].index;
        continuing(pos, pos);
        arc(rf(pos), rf(pos + 1), lab);
        bc.vertices.push_back({lf(pos), {lab}});
        break;
      }
      case EventType::BlackDeath: {
        int lab = wl.letters[pos].index;
        continuing(pos, pos + 1);
        arc(lf(pos), lf(pos + 1), lab);
        bc.vertices.push_back({lf(pos), {lab}});
        break;
      }
      case EventType::IIBirth: {
        int lab = wr.letters[pos].index;
        continuing(pos, pos);
        arc(rf(pos), rf(pos + 1), lab);
        arc(rf(pos + 1), rf(pos + 2), lab);
        bc.vertices.push_back({rf(pos), {lab, lab}});
        break;
      }
      case EventType::IIDeath: {
        int lab = wl.letters[pos].index;
        continuing(pos, pos + 2);
        arc(lf(pos), lf(pos + 1), lab);
        arc(lf(pos + 1), lf(pos + 2), lab);
        bc.vertices.push_back({lf(pos), {lab, lab}});
        break;
      }
      case EventType::Crossing: {
        int a = wl.letters[pos].index, b = wl.letters[pos + 1].index;
        continuing(pos, pos + 2);
        arc(lf(pos), lf(pos + 1), a);      // upper left
        arc(lf(pos + 1), lf(pos + 2), b);  // lower left
        arc(rf(pos), rf(pos + 1), b);      // upper right
        arc(rf(pos + 1), rf(pos + 2), a);  // lower right
        bc.vertices.push_back({lf(pos), {a, b, a, b}});
        break;
      }
      case EventType::White: {
        int a = wl.letters[pos].index, b = wl.letters[pos + 1].index;
        continuing(pos, pos + 3);
        arc(lf(pos), lf(pos + 1), a);
        arc(lf(pos + 1), lf(pos + 2), b);
        arc(lf(pos + 2), lf(pos + 3), a);
        arc(rf(pos), rf(pos + 1), b);
        arc(rf(pos + 1), rf(pos + 2), a);
        arc(rf(pos + 2), rf(pos + 3), b);
        bc.vertices.push_back({lf(pos), {a, b, a, b, a, b}});
        break;
      }
      case EventType::Node: {
        int lab = wl.letters[pos].index;
        continuing(pos, pos + 1);
        arc(lf(pos), lf(pos + 1), lab);
        arc(rf(pos), rf(pos + 1), lab);
        bc.vertices.push_back({lf(pos), {lab, lab}});
        break;
      }
    }
  }
  return bc;
}

}  // namespace

CellComplex build_cell_complex(const ChartMovie& c) {
  require_valid(c);
  int n = c.degree;
  CellComplex cx;
  if (c.events.empty()) {
    // n disjoint spheres, one point cell each
    cx.vertices = n;
    cx.faces = n;
    cx.base_euler = 2;
    cx.components = n;
    for (int k = 1; k <= n; ++k) {
      cx.component_sheets.push_back({k});
      cx.component_euler.push_back(2);
    }
    return cx;
  }
  BaseComplex bc = cellulate(c);
  cx.base_euler =
      (long long)bc.vertices.size() - (long long)bc.edges.size() + bc.nfaces;
  if (cx.base_euler != 2)
    throw invalid_argument("base cellulation is not a sphere");

  // lift: sheets glue across arc edges by the raw transposition of the label
  DSU lift(bc.nfaces * n);
  auto id = [&](int face, int k) { return face * n + (k - 1); };
  auto tau = [&](int lab, int k) {
    return k == lab ? lab + 1 : (k == lab + 1 ? lab : k);
  };
  for (const auto& e : bc.edges)
    for (int k = 1; k <= n; ++k)
      lift.unite(id(e.f1, k), id(e.f2, e.label ? tau(e.label, k) : k));

  std::map<int, int> comp_index;
  auto comp_of = [&](int face, int k) {
    int r = lift.find(id(face, k));
    auto it = comp_index.find(r);
    if (it == comp_index.end()) {
      it = comp_index.emplace(r, (int)comp_index.size()).first;
      cx.component_sheets.emplace_back();
      cx.component_euler.push_back(0);
    }
    return it->second;
  };
  // faces
  for (int f = 0; f < bc.nfaces; ++f)
    for (int k = 1; k <= n; ++k) {
      cx.component_euler[comp_of(f, k)] += 1;
      cx.faces += 1;
    }
  // edges: n lifted copies each, component of the sheet-k side of f1
  for (const auto& e : bc.edges)
    for (int k = 1; k <= n; ++k) {
      cx.component_euler[comp_of(e.f1, k)] -= 1;
      cx.edges += 1;
    }
  // vertices: one lifted copy per cycle of the local monodromy
  for (const auto& v : bc.vertices) {
    Permutation mu = Permutation::identity(n);
    for (int lab : v.labels)
      mu = mu.then(Permutation::transposition(n, lab, lab + 1));
    std::vector<bool> seen(n + 1, false);
    for (int k = 1; k <= n; ++k) {
      if (seen[k]) continue;
      for (int x = k; !seen[x]; x = mu(x)) seen[x] = true;
      cx.component_euler[comp_of(v.face, k)] += 1;
      cx.vertices += 1;
    }
  }
  cx.components = (int)comp_index.size();
  // sheet membership only makes sense over the base-point region
  for (int k = 1; k <= n; ++k)
    cx.component_sheets[comp_of(bc.outer, k)].push_back(k);
  return cx;
}

FoldingClass folding_class(const ChartMovie& c) {
  ChartMovie so = semi_orient(c);
  int nodes = node_count(so);
  return {nodes == 0, nodes};
}

}  // namespace chartfold
