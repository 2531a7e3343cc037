#pragma once

#include <string>
#include <vector>

#include "chartfold/coloring.hpp"
#include "chartfold/essay.hpp"

namespace chartfold {

// One strand of the 3-fold state: a core chart label plus a conjugator word
// over the labels {1, 2}. The front letter of conj is innermost; the strand
// monodromy is perm(conj)^-1 * core * perm(conj).
struct FoldStrand {
  std::vector<Letter> conj;
  Letter core{1, +1};
  bool operator==(const FoldStrand&) const = default;
};

struct FoldState {
  std::vector<FoldStrand> strands;
  bool operator==(const FoldState&) const = default;
};

FoldState initial_state(const ColorVector& coloring);

// Transposition represented by one strand's monodromy.
Transposition strand_monodromy(const FoldStrand& s);

// Braid-phase update for one letter; no simplification.
FoldState braid_step(const FoldState& s, const Letter& letter);

struct SimplifyOutcome {
  FoldState state;
  std::vector<std::string> log;
  int node_pairs = 0;  // pairs of nodes introduced, after cancellation
};

// Empty every conjugator down to the canonical color encoding, logging
// saddle cancellations, C-III reductions and node-pair insertions.
SimplifyOutcome simplify_words(const FoldState& s);

struct FoldResult {
  Essay essay;
  int node_count = 0;  // node events of the immersion, 2 per surviving pair
  std::vector<std::string> move_log;
};

FoldResult fold3(const Word& beta, int strands, const ColorVector& coloring);

}  // namespace chartfold
