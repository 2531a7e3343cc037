#include "chartfold/essay.hpp"

#include <algorithm>

#include "chartfold/algebra.hpp"

namespace chartfold {
namespace {

bool is_black(const ChartEvent& e) {
  return e.type == EventType::BlackBirth || e.type == EventType::BlackDeath;
}
bool is_pair(const ChartEvent& e) {
  return e.type == EventType::IIBirth || e.type == EventType::IIDeath;
}

// do prev and next agree outside the window [site, site+plen) / [site, site+qlen)?
bool frame_matches(const ChartMovie& prev, const ChartMovie& next, int site,
                   int plen, int qlen) {
  int pn = (int)prev.events.size(), qn = (int)next.events.size();
  if (site < 0 || plen < 0 || qlen < 0) return false;
  if (site + plen > pn || site + qlen > qn) return false;
  if (pn - plen != qn - qlen) return false;
  for (int i = 0; i < site; ++i)
    if (prev.events[i] != next.events[i] || prev.slices[i] != next.slices[i])
      return false;
  if (prev.slices[site] != next.slices[site]) return false;
  for (int i = site + plen; i <= pn; ++i) {
    int j = i - plen + qlen;
    if (prev.slices[i] != next.slices[j]) return false;
    if (i < pn && prev.events[i] != next.events[j]) return false;
  }
  return true;
}

std::vector<Transposition> window_entries(const ChartMovie& c, int from,
                                          int len) {
  std::vector<Transposition> out;
  for (int i = from; i < from + len; ++i)
    if (is_black(c.events[i])) out.push_back(black_entry(c, i));
  return out;
}

// shape checks on the side of the window that carries the inserted events;
// net word identity is implied by frame_matches
bool handle_pair_shape(const ChartMovie& c, int site) {
  const ChartEvent &a = c.events[site], &b = c.events[site + 1];
  return is_black(a) && is_black(b) && a.pos == b.pos && a.type != b.type;
}
bool oval_shape(const ChartMovie& c, int site, int pos_gap) {
  const ChartEvent &a = c.events[site], &b = c.events[site + 1];
  return a.type == EventType::IIBirth && b.type == EventType::IIDeath &&
         std::abs(a.pos - b.pos) == pos_gap;
}
bool saddle_shape(const ChartMovie& c, int site) {
  const ChartEvent &a = c.events[site], &b = c.events[site + 1];
  return (a.type == EventType::IIDeath && b.type == EventType::IIBirth) ||
         (a.type == EventType::IIBirth && b.type == EventType::IIDeath);
}
bool node_pair_shape(const ChartMovie& c, int site) {
  const ChartEvent &a = c.events[site], &b = c.events[site + 1];
  return a.type == EventType::Node && b.type == EventType::Node &&
         a.pos == b.pos;
}
bool bend_pair_shape(const ChartMovie& c, int site) {
  const ChartEvent &a = c.events[site], &b = c.events[site + 1];
  return (is_pair(a) && is_black(b)) || (is_black(a) && is_pair(b));
}

std::string check_move(const ChartMovie& prev, const CurtainMove& m,
                       const ChartMovie& next, const ValidateOptions& opt) {
  int site = m.site;
  auto frame = [&](int p, int q) { return frame_matches(prev, next, site, p, q); };
  switch (m.kind) {
    case MoveKind::OneH:
      if (frame(0, 2) && handle_pair_shape(next, site)) return "";
      return "1H does not insert an isolated black pair";
    case MoveKind::TwoH:
      if (frame(2, 0) && handle_pair_shape(prev, site)) return "";
      return "2H does not delete an isolated black pair";
    case MoveKind::IIb:
      if (frame(0, 2) && oval_shape(next, site, 0)) return "";
      if (frame(2, 0) && oval_shape(prev, site, 0)) return "";
      return "IIb does not insert or delete a free oval";
    case MoveKind::IIs:
      if (frame(0, 2) && saddle_shape(next, site)) return "";
      if (frame(2, 0) && saddle_shape(prev, site)) return "";
      return "IIs does not insert or delete a saddle pair";
    case MoveKind::Z:
      if (frame(0, 2) && oval_shape(next, site, 1)) return "";
      if (frame(2, 0) && oval_shape(prev, site, 1)) return "";
      return "Z does not insert or delete a zigzag pair";
    case MoveKind::CC: {
      if (frame(1, 2) && is_black(prev.events[site]) &&
          bend_pair_shape(next, site))
        return "";
      if (frame(2, 1) && is_black(next.events[site]) &&
          bend_pair_shape(prev, site))
        return "";
      return "CC does not trade a black vertex for a bent pair";
    }
    case MoveKind::X:
      if (frame(2, 2) && is_black(prev.events[site]) &&
          is_black(prev.events[site + 1]) && is_black(next.events[site]) &&
          is_black(next.events[site + 1]))
        return "";
      return "X does not exchange two black vertices";
    case MoveKind::XiPlus:
      if (frame(0, 2) && node_pair_shape(next, site)) return "";
      return "Xi+ does not insert a node pair";
    case MoveKind::XiMinus:
      if (frame(2, 0) && node_pair_shape(prev, site)) return "";
      return "Xi- does not delete a node pair";
    case MoveKind::CIII: {
      if (!frame(2, 2)) return "C-III frame mismatch";
      auto pe = window_entries(prev, site, 2);
      auto ne = window_entries(next, site, 2);
      if (pe.size() != 1 || ne.size() != 1)
        return "C-III window must hold exactly one black vertex per side";
      if (pe != ne) return "C-III changes the branch monodromy";
      return "";
    }
    case MoveKind::CI: {
      for (int p = 0; p <= opt.ci_window_cap; ++p)
        for (int q = 0; q <= opt.ci_window_cap; ++q)
          if ((p || q) && frame(p, q) &&
              window_entries(prev, site, p) == window_entries(next, site, q))
            return "";
      return "C-I window not found within the configured bound";
    }
  }
  return "unknown move";
}

}  // namespace

std::string move_name(MoveKind k) {
  switch (k) {
    case MoveKind::OneH: return "1H";
    case MoveKind::TwoH: return "2H";
    case MoveKind::IIb: return "IIb";
    case MoveKind::IIs: return "IIs";
    case MoveKind::CC: return "CC";
    case MoveKind::X: return "X";
    case MoveKind::Z: return "Z";
    case MoveKind::XiPlus: return "Xi+";
    case MoveKind::XiMinus: return "Xi-";
    case MoveKind::CIII: return "CIII";
    case MoveKind::CI: return "CI";
  }
  throw invalid_argument("unknown move kind");
}

MoveKind parse_move_name(const std::string& name) {
  static const std::pair<const char*, MoveKind> table[] = {
      {"1H", MoveKind::OneH},   {"2H", MoveKind::TwoH},
      {"IIb", MoveKind::IIb},   {"IIs", MoveKind::IIs},
      {"CC", MoveKind::CC},     {"X", MoveKind::X},
      {"Z", MoveKind::Z},       {"Xi+", MoveKind::XiPlus},
      {"Xi-", MoveKind::XiMinus}, {"CIII", MoveKind::CIII},
      {"CI", MoveKind::CI}};
  for (auto& [n, k] : table)
    if (name == n) return k;
  throw parse_error("unknown move name: " + name);
}

ValidationReport validate_essay(const Essay& e, const ValidateOptions& opt) {
  ValidationReport r;
  auto fail = [&](int idx, std::string msg) {
    r.diagnostics.push_back({idx, std::move(msg)});
  };
  if (e.charts.size() != e.moves.size() + 1) {
    fail(-1, "chart count must be move count + 1");
    return r;
  }
  for (size_t i = 0; i < e.charts.size(); ++i) {
    const ChartMovie& c = e.charts[i];
    if (c.kind != e.kind || c.degree != e.degree) {
      fail((int)i, "chart kind/degree mismatch");
      return r;
    }
    ValidationReport cr = validate_movie(c);
    if (!cr.ok()) {
      fail((int)i, "chart invalid: " + cr.diagnostics[0].message);
      return r;
    }
  }
  if (!e.charts.front().events.empty()) fail(-1, "first chart must be empty");
  if (!e.charts.back().events.empty()) fail(-1, "last chart must be empty");
  for (size_t i = 0; i < e.moves.size(); ++i) {
    std::string msg = check_move(e.charts[i], e.moves[i], e.charts[i + 1], opt);
    if (!msg.empty())
      fail((int)i, move_name(e.moves[i].kind) + "@" +
                       std::to_string(e.moves[i].site) + ": " + msg);
  }
  return r;
}

void require_valid(const Essay& e, const ValidateOptions& opt) {
  ValidationReport r = validate_essay(e, opt);
  if (!r.ok()) throw invalid_argument("invalid essay: " + r.diagnostics[0].message);
}

HandleCounts handle_counts(const Essay& e) {
  require_valid(e);
  HandleCounts h{count_moves(e, MoveKind::OneH), count_moves(e, MoveKind::TwoH)};
  // closed essays start and end empty, and only handle moves change the
  // black-vertex count, so the two tallies must cancel
  if (h.one_handles != h.two_handles)
    throw invalid_argument("closed essay with unbalanced handle counts");
  return h;
}

int count_moves(const Essay& e, MoveKind k) {
  int n = 0;
  for (const auto& m : e.moves)
    if (m.kind == k) ++n;
  return n;
}

int essay_node_events(const Essay& e) {
  int n = 0;
  for (const auto& c : e.charts) n += node_count(c);
  return n;
}

}  // namespace chartfold
