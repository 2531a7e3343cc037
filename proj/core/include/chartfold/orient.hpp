#pragma once
#include <variant>

#include "movie.hpp"

namespace chartfold {

// conflict witness: the white vertices that cannot all be given a flow
struct Obstruction {
  std::vector<int> white_events;
};

using OrientOutcome = std::variant<ChartMovie, Obstruction>;

// Lift a permutation movie to a braid movie with the same skeleton and no
// node events, or report why no arc-sign assignment works.
OrientOutcome orient(const ChartMovie& c);

// Always succeeds: braid movie with node pairs bracketing each white vertex
// whose sign pattern cannot be repaired globally. Node count is even and is
// zero exactly when orient succeeds.
ChartMovie semi_orient(const ChartMovie& c);

}  // namespace chartfold
