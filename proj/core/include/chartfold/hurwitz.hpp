#pragma once
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "algebra.hpp"

namespace chartfold {

// Transposition (a b) in the symmetric group on {1..degree}; a < b.
struct Transposition {
  int a = 1, b = 2;
  auto operator<=>(const Transposition&) const = default;
  Permutation to_perm(int degree) const {
    return Permutation::transposition(degree, a, b);
  }
};
inline Transposition make_transposition(int a, int b) {
  return a < b ? Transposition{a, b} : Transposition{b, a};
}

struct HurwitzSystem {
  int degree = 2;
  std::vector<Transposition> entries;
  auto operator<=>(const HurwitzSystem&) const = default;
};

Permutation hs_product(const HurwitzSystem& s);
bool hs_is_transitive(const HurwitzSystem& s);

// Elementary moves:
//   forward at k:  (.., a_k, a_{k+1}, ..) -> (.., a_{k+1}, a_{k+1} a_k a_{k+1}, ..)
//   backward at k: (.., a_k, a_{k+1}, ..) -> (.., a_k a_{k+1} a_k, a_k, ..)
// (transpositions are involutions, so conjugation reads either way), and
// simultaneous conjugation of every entry by g.
struct HurwitzMoveStep {
  int k;          // 0-based slot
  bool forward;   // false = backward
};
struct ConjugationStep {
  Permutation g;
};
using HCStep = std::variant<HurwitzMoveStep, ConjugationStep>;

HurwitzSystem apply_hurwitz_move(const HurwitzSystem& s, int k, bool forward);
HurwitzSystem apply_conjugation(const HurwitzSystem& s, const Permutation& g);
HurwitzSystem apply_step(const HurwitzSystem& s, const HCStep& step);

// Normal form ((12)^(m-2(n-2)), (13),(13), (14),(14), .., (1n),(1n)).
HurwitzSystem normal_form(int degree, int length);

struct NormalizeResult {
  HurwitzSystem normal;
  std::vector<HCStep> steps;  // from input to normal form
};

// Drives a transitive identity-product system to the normal form by BFS over
// the move graph. Throws invalid_argument if preconditions fail.
NormalizeResult hc_normalize(const HurwitzSystem& s, size_t state_cap = 2000000);

bool hc_equivalent(const HurwitzSystem& a, const HurwitzSystem& b,
                   size_t state_cap = 2000000);

// Full orbit under moves + conjugation; independent oracle for small systems.
std::set<HurwitzSystem> hc_orbit_bfs(const HurwitzSystem& s,
                                     size_t state_cap = 2000000);

std::string hs_to_string(const HurwitzSystem& s);
HurwitzSystem parse_hurwitz(const std::string& text);

}  // namespace chartfold
