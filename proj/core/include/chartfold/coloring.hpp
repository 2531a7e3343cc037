#pragma once

#include <set>
#include <vector>

#include "chartfold/hurwitz.hpp"
#include "chartfold/word.hpp"

namespace chartfold {

// Fox 3-coloring at a braid cross-section: one transposition in S3 per
// strand, each one of (12), (23), (13).
struct ColorVector {
  std::vector<Transposition> colors;

  bool operator==(const ColorVector&) const = default;
  auto operator<=>(const ColorVector&) const = default;
};

bool color_is_constant(const ColorVector& cv);

// Rewrite at one braid letter: positively, (c_j, c_{j+1}) becomes
// (c_{j+1}, c_{j+1} c_j c_{j+1}); negative letters invert the rewrite.
ColorVector color_step(const ColorVector& cv, const Letter& letter);
ColorVector color_dynamics(const ColorVector& cv, const Word& beta);

// All non-constant vectors fixed by the closure of beta, conjugated so the
// first entry is (12). Empty set means the closure is not 3-colorable.
std::set<ColorVector> fox_colorings(const Word& beta, int strands);

std::string color_to_string(const ColorVector& cv);
ColorVector parse_colors(const std::string& text);

}  // namespace chartfold
