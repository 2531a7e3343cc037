#pragma once
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chartfold {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_argument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Kind : uint8_t { Perm, Braid };

// One chart label crossing: index is 1-based (t<i> or s<i>), sign is +1/-1.
// Perm letters always carry sign +1.
struct Letter {
  int index = 1;
  int sign = +1;
  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return {index, -sign}; }
};

// A cross-sectional word: sequence of letters read top to bottom.
struct Word {
  Kind kind = Kind::Perm;
  int degree = 2;  // letters range over 1..degree-1
  std::vector<Letter> letters;

  bool operator==(const Word&) const = default;
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
};

// Text form: "(s1 s2' s1)" for braid, "(t1 t2)" for perm, "()" empty.
std::string word_to_string(const Word& w);
// Parses the letter list; degree is the caller's context (letters checked against it).
Word parse_word(const std::string& text, Kind kind, int degree);

void check_letter(const Letter& l, Kind kind, int degree);

}  // namespace chartfold
