#include "chartfold/word.hpp"

#include <sstream>

namespace chartfold {

void check_letter(const Letter& l, Kind kind, int degree) {
  if (l.index < 1 || l.index > degree - 1)
    throw invalid_argument("letter index out of range for degree");
  if (l.sign != 1 && l.sign != -1) throw invalid_argument("bad letter sign");
  if (kind == Kind::Perm && l.sign != 1)
    throw invalid_argument("perm letters cannot be inverted");
}

std::string word_to_string(const Word& w) {
  std::string out = "(";
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) out += ' ';
    first = false;
    out += (w.kind == Kind::Perm ? 't' : 's');
    out += std::to_string(l.index);
    if (l.sign < 0) out += '\'';
  }
  out += ')';
  return out;
}

Word parse_word(const std::string& text, Kind kind, int degree) {
  size_t a = text.find('(');
  size_t b = text.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw parse_error("word must be parenthesized: " + text);
  Word w;
  w.kind = kind;
  w.degree = degree;
  std::istringstream in(text.substr(a + 1, b - a - 1));
  std::string tok;
  while (in >> tok) {
    char c = tok[0];
    if ((kind == Kind::Perm && c != 't') || (kind == Kind::Braid && c != 's'))
      throw parse_error("letter kind mismatch in word: " + tok);
    Letter l;
    l.sign = +1;
    std::string rest = tok.substr(1);
    if (!rest.empty() && rest.back() == '\'') {
      l.sign = -1;
      rest.pop_back();
    }
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad letter token: " + tok);
    l.index = std::stoi(rest);
    check_letter(l, kind, degree);
    w.letters.push_back(l);
  }
  return w;
}

}  // namespace chartfold
