#include "chartfold/hurwitz.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <queue>
#include <sstream>

namespace chartfold {

Permutation hs_product(const HurwitzSystem& s) {
  Permutation p = Permutation::identity(s.degree);
  for (const Transposition& t : s.entries) p = p.then(t.to_perm(s.degree));
  return p;
}

bool hs_is_transitive(const HurwitzSystem& s) {
  int n = s.degree;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Transposition& t : s.entries) {
    int ra = find(t.a - 1), rb = find(t.b - 1);
    if (ra != rb) parent[ra] = rb;
  }
  int root = find(0);
  for (int i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

static Transposition conj(const Transposition& t, const Permutation& g) {
  // image of entry under simultaneous relabeling x -> g(x)
  return make_transposition(g(t.a), g(t.b));
}

HurwitzSystem apply_hurwitz_move(const HurwitzSystem& s, int k, bool forward) {
  if (k < 0 || k + 1 >= (int)s.entries.size())
    throw invalid_argument("hurwitz move slot out of range");
  HurwitzSystem r = s;
  Transposition a = s.entries[k], b = s.entries[k + 1];
  if (forward) {
    r.entries[k] = b;
    r.entries[k + 1] = conj(a, b.to_perm(s.degree));
  } else {
    r.entries[k] = conj(b, a.to_perm(s.degree));
    r.entries[k + 1] = a;
  }
  return r;
}

HurwitzSystem apply_conjugation(const HurwitzSystem& s, const Permutation& g) {
  HurwitzSystem r = s;
  for (auto& t : r.entries) t = conj(t, g);
  return r;
}

HurwitzSystem apply_step(const HurwitzSystem& s, const HCStep& step) {
  if (auto* m = std::get_if<HurwitzMoveStep>(&step))
    return apply_hurwitz_move(s, m->k, m->forward);
  return apply_conjugation(s, std::get<ConjugationStep>(step).g);
}

HurwitzSystem normal_form(int degree, int length) {
  int head = length - 2 * (degree - 2);
  if (head < 2 || head % 2 != 0)
    throw invalid_argument("no normal form at this degree/length");
  HurwitzSystem r;
  r.degree = degree;
  for (int i = 0; i < head; ++i) r.entries.push_back({1, 2});
  for (int k = 3; k <= degree; ++k) {
    r.entries.push_back({1, k});
    r.entries.push_back({1, k});
  }
  return r;
}

static std::vector<Permutation> all_permutations(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<Permutation> out;
  std::sort(base.begin(), base.end());
  do {
    out.push_back(Permutation{base});
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

namespace {
struct BfsResult {
  std::map<HurwitzSystem, std::pair<HurwitzSystem, HCStep>> parent;
  std::set<HurwitzSystem> seen;
};

// BFS over moves + conjugations from `start`; stops early when `target`
// (if any) is reached.
BfsResult hc_bfs(const HurwitzSystem& start,
                 const std::optional<HurwitzSystem>& target, size_t cap) {
  BfsResult r;
  auto conjs = all_permutations(start.degree);
  std::queue<HurwitzSystem> q;
  q.push(start);
  r.seen.insert(start);
  while (!q.empty()) {
    HurwitzSystem cur = q.front();
    q.pop();
    if (target && cur == *target) break;
    auto visit = [&](HurwitzSystem next, HCStep step) {
      if (r.seen.insert(next).second) {
        r.parent.emplace(next, std::make_pair(cur, std::move(step)));
        q.push(std::move(next));
      }
    };
    for (int k = 0; k + 1 < (int)cur.entries.size(); ++k) {
      visit(apply_hurwitz_move(cur, k, true), HurwitzMoveStep{k, true});
      visit(apply_hurwitz_move(cur, k, false), HurwitzMoveStep{k, false});
    }
    for (const auto& g : conjs) {
      if (g.is_identity()) continue;
      visit(apply_conjugation(cur, g), ConjugationStep{g});
    }
    if (r.seen.size() > cap)
      throw invalid_argument("hurwitz orbit exceeded state cap");
  }
  return r;
}
}  // namespace

NormalizeResult hc_normalize(const HurwitzSystem& s, size_t cap) {
  if (!hs_product(s).is_identity())
    throw invalid_argument("normalize: product is not the identity");
  if (!hs_is_transitive(s))
    throw invalid_argument("normalize: system is not transitive");
  HurwitzSystem nf = normal_form(s.degree, (int)s.entries.size());
  auto bfs = hc_bfs(s, nf, cap);
  if (!bfs.seen.count(nf))
    throw invalid_argument("normalize: normal form not reachable");
  NormalizeResult out;
  out.normal = nf;
  HurwitzSystem cur = nf;
  while (!(cur == s)) {
    auto it = bfs.parent.find(cur);
    out.steps.push_back(it->second.second);
    cur = it->second.first;
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

bool hc_equivalent(const HurwitzSystem& a, const HurwitzSystem& b,
                   size_t cap) {
  if (a.degree != b.degree || a.entries.size() != b.entries.size())
    return false;
  return hc_normalize(a, cap).normal == hc_normalize(b, cap).normal;
}

std::set<HurwitzSystem> hc_orbit_bfs(const HurwitzSystem& s, size_t cap) {
  return hc_bfs(s, std::nullopt, cap).seen;
}

std::string hs_to_string(const HurwitzSystem& s) {
  std::ostringstream out;
  out << "degree: " << s.degree << " [";
  for (size_t i = 0; i < s.entries.size(); ++i) {
    if (i) out << ' ';
    out << '(' << s.entries[i].a << ' ' << s.entries[i].b << ')';
  }
  out << ']';
  return out.str();
}

HurwitzSystem parse_hurwitz(const std::string& text) {
  HurwitzSystem s;
  std::istringstream in(text);
  std::string tok;
  if (!(in >> tok) || tok != "degree:") throw parse_error("expected degree:");
  if (!(in >> s.degree) || s.degree < 2) throw parse_error("bad degree");
  std::string rest((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  size_t lb = rest.find('[');
  size_t rb = rest.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw parse_error("expected [..] entry list");
  std::string body = rest.substr(lb + 1, rb - lb - 1);
  for (char& c : body)
    if (c == '(' || c == ')') c = ' ';
  std::istringstream eb(body);
  int a, b;
  while (eb >> a >> b) {
    if (a < 1 || b < 1 || a > s.degree || b > s.degree || a == b)
      throw parse_error("bad transposition entry");
    s.entries.push_back(make_transposition(a, b));
  }
  if (!eb.eof()) throw parse_error("trailing junk in entry list");
  return s;
}

}  // namespace chartfold
