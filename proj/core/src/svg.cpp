#include <sstream>

#include "chartfold/svg.hpp"

namespace chartfold {

namespace {

const int kDX = 48;          // slice pitch
const int kDY = 28;          // word position pitch
const int kMargin = 24;

// color of the letter at position `pos` of slice `t`, via the conjugated
// transposition of its label
std::string arc_color(const ChartMovie& c, int t, int pos) {
  const Word& w = c.slices[t];
  Word prefix = w;
  prefix.letters.assign(w.letters.begin(), w.letters.begin() + pos);
  Permutation p = perm_image(prefix);
  int i = w.letters[pos].index;
  int a = p(i), b = p(i + 1);
  if (a > b) std::swap(a, b);
  if (a == 1 && b == 2) return "#1f4fd8";  // blue
  if (a == 2 && b == 3) return "#d82f2f";  // red
  if (a == 1 && b == 3) return "#1d9e48";  // green
  return "#444444";
}

// where position `pos` of the pre-slice lands in the post-slice, or -1
int track(const ChartEvent& e, int pos) {
  using ET = EventType;
  switch (e.type) {
    case ET::BlackBirth: return pos < e.pos ? pos : pos + 1;
    case ET::BlackDeath: return pos < e.pos ? pos : (pos == e.pos ? -1 : pos - 1);
    case ET::IIBirth: return pos < e.pos ? pos : pos + 2;
    case ET::IIDeath:
      return pos < e.pos ? pos : (pos <= e.pos + 1 ? -1 : pos - 2);
    case ET::Crossing:
      if (pos == e.pos) return pos + 1;
      if (pos == e.pos + 1) return pos - 1;
      return pos;
    default: return pos;
  }
}

void render_movie_at(std::ostringstream& out, const ChartMovie& c, int x0,
                     int y0) {
  int s = (int)c.events.size();
  for (int t = 0; t <= s; ++t) {
    int x = x0 + t * kDX;
    // arcs to the next slice
    if (t < s) {
      for (int pos = 0; pos < (int)c.slices[t].letters.size(); ++pos) {
        int q = track(c.events[t], pos);
        if (q < 0) {
          out << "<line x1=\"" << x << "\" y1=\"" << y0 + pos * kDY
              << "\" x2=\"" << x + kDX / 2 << "\" y2=\"" << y0 + pos * kDY
              << "\" stroke=\"" << arc_color(c, t, pos)
              << "\" stroke-width=\"2\"/>\n";
        } else {
          out << "<line x1=\"" << x << "\" y1=\"" << y0 + pos * kDY
              << "\" x2=\"" << x + kDX << "\" y2=\"" << y0 + q * kDY
              << "\" stroke=\"" << arc_color(c, t, pos)
              << "\" stroke-width=\"2\"/>\n";
        }
      }
      // arcs born at this event
      const ChartEvent& e = c.events[t];
      int born = e.type == EventType::BlackBirth ? 1
                 : e.type == EventType::IIBirth  ? 2
                                                 : 0;
      for (int k = 0; k < born; ++k) {
        int q = e.pos + k;
        out << "<line x1=\"" << x + kDX / 2 << "\" y1=\"" << y0 + q * kDY
            << "\" x2=\"" << x + kDX << "\" y2=\"" << y0 + q * kDY
            << "\" stroke=\"" << arc_color(c, t + 1, q)
            << "\" stroke-width=\"2\"/>\n";
      }
      // event marker
      int ex = x + kDX / 2, ey = y0 + e.pos * kDY;
      switch (e.type) {
        case EventType::BlackBirth:
        case EventType::BlackDeath:
          out << "<circle cx=\"" << ex << "\" cy=\"" << ey
              << "\" r=\"4\" fill=\"#000000\"/>\n";
          break;
        case EventType::White:
          out << "<circle cx=\"" << ex << "\" cy=\"" << ey + kDY
              << "\" r=\"4\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
          break;
        case EventType::Node:
          out << "<rect x=\"" << ex - 4 << "\" y=\"" << ey - 4
              << "\" width=\"8\" height=\"8\" fill=\"#000000\"/>\n";
          break;
        default:
          break;
      }
    }
  }
}

std::pair<int, int> movie_extent(const ChartMovie& c) {
  int w = (int)c.events.size() * kDX;
  int h = 0;
  for (const auto& s : c.slices) h = std::max(h, (int)s.letters.size());
  return {w, (h > 0 ? (h - 1) * kDY : 0)};
}

}  // namespace

std::string render_svg(const ChartMovie& c) {
  auto [w, h] = movie_extent(c);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << w + 2 * kMargin << "\" height=\"" << h + 2 * kMargin << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << w + 2 * kMargin << "\" height=\""
      << h + 2 * kMargin << "\" fill=\"#ffffff\" stroke=\"#888888\"/>\n";
  render_movie_at(out, c, kMargin, kMargin);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Essay& e) {
  int w = 0, y = kMargin;
  std::vector<int> tops;
  for (const auto& c : e.charts) {
    auto [cw, ch] = movie_extent(c);
    w = std::max(w, cw);
    tops.push_back(y);
    y += ch + kDY + 18;
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << w + 2 * kMargin << "\" height=\"" << y + kMargin << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << w + 2 * kMargin
      << "\" height=\"" << y + kMargin << "\" fill=\"#ffffff\" stroke=\"#888888\"/>\n";
  for (size_t i = 0; i < e.charts.size(); ++i) {
    render_movie_at(out, e.charts[i], kMargin, tops[i]);
    if (i < e.moves.size())
      out << "<text x=\"" << kMargin << "\" y=\""
          << tops[i] + (i + 1 < tops.size() ? tops[i + 1] - tops[i] : 0) - 6
          << "\" font-size=\"12\" font-family=\"monospace\">"
          << move_name(e.moves[i].kind) << "@" << e.moves[i].site
          << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace chartfold
