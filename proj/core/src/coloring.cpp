#include <regex>
#include <sstream>
#include <stdexcept>

#include "chartfold/coloring.hpp"

namespace chartfold {

namespace {

const Transposition kPalette[3] = {{1, 2}, {2, 3}, {1, 3}};

Transposition conj3(Transposition x, Transposition by) {
  // y x y for transpositions in S3: equal -> fixed, else the third one
  if (x == by) return x;
  for (const auto& t : kPalette)
    if (t != x && t != by) return t;
  return x;  // unreachable
}

Transposition relabel(Transposition x, const Permutation& g) {
  return make_transposition(g(x.a), g(x.b));
}

}  // namespace

bool color_is_constant(const ColorVector& cv) {
  for (const auto& c : cv.colors)
    if (!(c == cv.colors.front())) return false;
  return true;
}

ColorVector color_step(const ColorVector& cv, const Letter& letter) {
  int m = (int)cv.colors.size();
  int j = letter.index;
  if (j < 1 || j >= m) throw std::invalid_argument("color_step: letter index out of range");
  ColorVector out = cv;
  Transposition a = cv.colors[j - 1], b = cv.colors[j];
  if (letter.sign > 0) {
    out.colors[j - 1] = b;
    out.colors[j] = conj3(a, b);
  } else {
    out.colors[j - 1] = conj3(b, a);
    out.colors[j] = a;
  }
  return out;
}

ColorVector color_dynamics(const ColorVector& cv, const Word& beta) {
  ColorVector out = cv;
  for (const auto& l : beta.letters) out = color_step(out, l);
  return out;
}

std::set<ColorVector> fox_colorings(const Word& beta, int strands) {
  if (beta.kind != Kind::Braid)
    throw std::invalid_argument("fox_colorings needs a braid word");
  if (strands < 1) throw std::invalid_argument("strands must be positive");
  for (const auto& l : beta.letters)
    if (l.index < 1 || l.index >= strands)
      throw std::invalid_argument("braid letter index out of range");
  std::set<ColorVector> out;
  std::vector<int> pick(strands, 0);
  for (;;) {
    ColorVector cv;
    for (int p : pick) cv.colors.push_back(kPalette[p]);
    if (!color_is_constant(cv) && color_dynamics(cv, beta) == cv) {
      // conjugate the whole vector so c_1 becomes (12)
      Transposition c1 = cv.colors.front();
      for (const auto& g : {Permutation::identity(3),
                            Permutation::transposition(3, 1, 2),
                            Permutation::transposition(3, 1, 3),
                            Permutation::transposition(3, 2, 3),
                            Permutation::transposition(3, 1, 2).then(
                                Permutation::transposition(3, 2, 3)),
                            Permutation::transposition(3, 2, 3).then(
                                Permutation::transposition(3, 1, 2))}) {
        if (relabel(c1, g) == Transposition{1, 2}) {
          ColorVector norm;
          for (const auto& c : cv.colors) norm.colors.push_back(relabel(c, g));
          out.insert(norm);
        }
      }
    }
    int i = 0;
    while (i < strands && ++pick[i] == 3) pick[i++] = 0;
    if (i == strands) break;
  }
  return out;
}

std::string color_to_string(const ColorVector& cv) {
  std::ostringstream out;
  for (size_t i = 0; i < cv.colors.size(); ++i) {
    if (i) out << ",";
    out << "(" << cv.colors[i].a << cv.colors[i].b << ")";
  }
  return out.str();
}

ColorVector parse_colors(const std::string& text) {
  static const std::regex item(R"(\((\d)\s*,?\s*(\d)\))");
  ColorVector cv;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), item);
       it != std::sregex_iterator(); ++it) {
    int a = std::stoi((*it)[1]), b = std::stoi((*it)[2]);
    if (a < 1 || b < 1 || a > 3 || b > 3 || a == b)
      throw parse_error("colors must be transpositions in S3");
    cv.colors.push_back(make_transposition(a, b));
  }
  if (cv.colors.empty()) throw parse_error("no colors found");
  return cv;
}

}  // namespace chartfold
