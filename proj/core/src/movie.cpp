#include "chartfold/movie.hpp"

#include <cstdlib>
#include <sstream>

#include "chartfold/algebra.hpp"

namespace chartfold {

ChartMovie empty_movie(Kind kind, int degree) {
  ChartMovie c;
  c.kind = kind;
  c.degree = degree;
  c.slices.push_back(Word{kind, degree, {}});
  return c;
}

namespace {

std::string describe(const ChartEvent& e) { return event_token(e); }

// checks pre --e--> post against the event template; empty string = ok
std::string check_transition(const Word& pre, const ChartEvent& e,
                             const Word& post, Kind kind) {
  int pos = e.pos;
  auto same_outside = [&](int pre_cut, int pre_len, int post_cut,
                          int post_len) {
    if ((int)pre.size() - pre_len != (int)post.size() - post_len) return false;
    for (int i = 0; i < pre_cut; ++i)
      if (pre.letters[i] != post.letters[i]) return false;
    for (int i = pre_cut + pre_len; i < (int)pre.size(); ++i)
      if (pre.letters[i] != post.letters[i - pre_len + post_len]) return false;
    return true;
  };
  switch (e.type) {
    case EventType::BlackBirth: {
      if (pos < 0 || pos > (int)pre.size()) return "birth position out of range";
      if (post.size() != pre.size() + 1 || !same_outside(pos, 0, pos, 1))
        return "birth does not insert exactly one letter";
      return "";
    }
    case EventType::BlackDeath: {
      if (pos < 0 || pos >= (int)pre.size()) return "death position out of range";
      if (post.size() + 1 != pre.size() || !same_outside(pos, 1, pos, 0))
        return "death does not delete exactly one letter";
      return "";
    }
    case EventType::IIBirth: {
      if (pos < 0 || pos > (int)pre.size())
        return "pair birth position out of range";
      if (post.size() != pre.size() + 2 || !same_outside(pos, 0, pos, 2))
        return "pair birth does not insert two letters";
      Letter a = post.letters[pos], b = post.letters[pos + 1];
      bool cancel = kind == Kind::Perm ? a == b : a == b.inverse();
      if (!cancel) return "pair birth letters do not cancel";
      return "";
    }
    case EventType::IIDeath: {
      if (pos < 0 || pos + 1 >= (int)pre.size())
        return "pair death position out of range";
      if (post.size() + 2 != pre.size() || !same_outside(pos, 2, pos, 0))
        return "pair death does not delete two letters";
      Letter a = pre.letters[pos], b = pre.letters[pos + 1];
      bool cancel = kind == Kind::Perm ? a == b : a == b.inverse();
      if (!cancel) return "pair death letters do not cancel";
      return "";
    }
    case EventType::Crossing: {
      if (pos < 0 || pos + 1 >= (int)pre.size())
        return "crossing position out of range";
      if (post.size() != pre.size() || !same_outside(pos, 2, pos, 2))
        return "crossing touches letters away from its site";
      Letter a = pre.letters[pos], b = pre.letters[pos + 1];
      if (post.letters[pos] != b || post.letters[pos + 1] != a)
        return "crossing does not swap its two letters";
      if (std::abs(a.index - b.index) < 2)
        return "crossing letters have adjacent indices";
      return "";
    }
    case EventType::White: {
      if (pos < 0 || pos + 2 >= (int)pre.size())
        return "white vertex position out of range";
      if (post.size() != pre.size() || !same_outside(pos, 3, pos, 3))
        return "white vertex touches letters away from its site";
      int i = pre.letters[pos].index, j = pre.letters[pos + 1].index;
      if (std::abs(i - j) != 1 || pre.letters[pos + 2].index != i)
        return "white vertex pre-segment indices not alternating i,i+1,i";
      if (post.letters[pos].index != j || post.letters[pos + 1].index != i ||
          post.letters[pos + 2].index != j)
        return "white vertex post-segment indices not alternating";
      if (kind == Kind::Braid) {
        Word u{Kind::Braid, std::max(i, j) + 1,
               {pre.letters[pos], pre.letters[pos + 1], pre.letters[pos + 2]}};
        Word v{Kind::Braid, std::max(i, j) + 1,
               {post.letters[pos], post.letters[pos + 1], post.letters[pos + 2]}};
        if (!braid_equal(u, v))
          return "white vertex sign pattern is not a braid relation";
      }
      return "";
    }
    case EventType::Node: {
      if (kind == Kind::Perm) return "node event in a permutation movie";
      if (pos < 0 || pos >= (int)pre.size()) return "node position out of range";
      if (post.size() != pre.size() || !same_outside(pos, 1, pos, 1))
        return "node touches letters away from its site";
      if (post.letters[pos] != pre.letters[pos].inverse())
        return "node does not flip exactly one sign";
      return "";
    }
  }
  return "unknown event";
}

}  // namespace

ValidationReport validate_movie(const ChartMovie& c) {
  ValidationReport r;
  auto fail = [&](int idx, std::string msg) {
    r.diagnostics.push_back({idx, std::move(msg)});
  };
  if (c.degree < 2) fail(-1, "degree must be at least 2");
  if (c.slices.size() != c.events.size() + 1) {
    fail(-1, "slice count must be event count + 1");
    return r;
  }
  for (size_t t = 0; t < c.slices.size(); ++t) {
    const Word& w = c.slices[t];
    if (w.kind != c.kind || w.degree != c.degree) {
      fail((int)t, "slice kind/degree mismatch");
      return r;
    }
    for (const Letter& l : w.letters) {
      try {
        check_letter(l, c.kind, c.degree);
      } catch (const std::exception& ex) {
        fail((int)t, ex.what());
        return r;
      }
    }
  }
  if (!c.slices.front().empty()) fail(-1, "first slice must be empty");
  if (!c.slices.back().empty()) fail(-1, "last slice must be empty");
  for (size_t t = 0; t < c.events.size(); ++t) {
    std::string msg =
        check_transition(c.slices[t], c.events[t], c.slices[t + 1], c.kind);
    if (!msg.empty()) fail((int)t, describe(c.events[t]) + ": " + msg);
  }
  if (black_count(c) % 2 != 0) fail(-1, "odd number of black vertices");
  return r;
}

void require_valid(const ChartMovie& c) {
  ValidationReport r = validate_movie(c);
  if (!r.ok()) throw invalid_argument("invalid movie: " + r.diagnostics[0].message);
}

const Word& slice_word(const ChartMovie& c, int t) {
  if (t < 0 || t >= (int)c.slices.size())
    throw invalid_argument("slice index out of range");
  return c.slices[t];
}

int black_count(const ChartMovie& c) {
  int k = 0;
  for (const auto& e : c.events)
    if (e.type == EventType::BlackBirth || e.type == EventType::BlackDeath) ++k;
  return k;
}

int node_count(const ChartMovie& c) {
  int k = 0;
  for (const auto& e : c.events)
    if (e.type == EventType::Node) ++k;
  return k;
}

Transposition black_entry(const ChartMovie& c, int event_index) {
  const ChartEvent& e = c.events[event_index];
  if (e.type != EventType::BlackBirth && e.type != EventType::BlackDeath)
    throw invalid_argument("black_entry on a non-black event");
  const Word& pre = c.slices[event_index];
  int label = e.type == EventType::BlackBirth
                  ? c.slices[event_index + 1].letters[e.pos].index
                  : pre.letters[e.pos].index;
  Word u{c.kind, c.degree, {pre.letters.begin(), pre.letters.begin() + e.pos}};
  Permutation pinv = perm_image(u).inverse();
  return make_transposition(pinv(label), pinv(label + 1));
}

HurwitzSystem extract_hurwitz(const ChartMovie& c) {
  require_valid(c);
  HurwitzSystem s;
  s.degree = c.degree;
  for (size_t t = 0; t < c.events.size(); ++t) {
    const ChartEvent& e = c.events[t];
    if (e.type == EventType::BlackBirth || e.type == EventType::BlackDeath)
      s.entries.push_back(black_entry(c, (int)t));
  }
  return s;
}

ChartMovie forget_signs(const ChartMovie& c) {
  ChartMovie out;
  out.kind = Kind::Perm;
  out.degree = c.degree;
  auto strip = [&](const Word& w) {
    Word v{Kind::Perm, c.degree, {}};
    for (Letter l : w.letters) v.letters.push_back({l.index, +1});
    return v;
  };
  out.slices.push_back(strip(c.slices.front()));
  for (size_t t = 0; t < c.events.size(); ++t) {
    if (c.events[t].type == EventType::Node) continue;
    out.events.push_back(c.events[t]);
    out.slices.push_back(strip(c.slices[t + 1]));
  }
  return out;
}

}  // namespace chartfold
