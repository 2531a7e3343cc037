#pragma once
#include <array>
#include <optional>
#include <vector>

#include "word.hpp"

namespace chartfold {

// Permutation on {1..n}, stored as images; composition is left-to-right:
// (p.then(q))(x) == q(p(x)).
struct Permutation {
  std::vector<int> img;  // img[i-1] = image of i

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  int n() const { return (int)img.size(); }
  int operator()(int x) const { return img[x - 1]; }
  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
  int cycle_count() const;
  bool is_single_cycle() const;
};

// Image of a word in the symmetric group: letters applied left to right,
// first letter acts first.
Permutation perm_image(const Word& w);

// Free reduction of a braid word: cancel adjacent mutually inverse letters.
Word free_reduce(const Word& w);

// Reduced word in a free group of rank `degree`; used for the Artin action.
using FreeWord = std::vector<Letter>;  // letters index 1..degree, signed

FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inv(const FreeWord& a);

// Image of the free generators x_1..x_n under the Artin action of the braid
// word. The action is faithful, so equal images == equal braid elements.
struct FreeImage {
  std::vector<FreeWord> gen_images;
  bool operator==(const FreeImage&) const = default;
};
FreeImage artin_image(const Word& w);

// Exact braid-group equality via the Artin action.
bool braid_equal(const Word& a, const Word& b);

// Determinant of the closure knot of a braid word on `strands` strands:
// |Delta(-1)| via the reduced Burau representation.
// Precondition: closure is a knot (underlying permutation is one cycle).
long long knot_determinant(const Word& beta, int strands);

// Closure permutation of a braid word on `strands` strands.
Permutation closure_permutation(const Word& beta, int strands);
bool closure_is_knot(const Word& beta, int strands);

// Alexander polynomial coefficients of the closure (lowest degree first,
// normalized to positive leading coefficient); exposed for oracle tests.
std::vector<long long> alexander_polynomial(const Word& beta, int strands);

}  // namespace chartfold
