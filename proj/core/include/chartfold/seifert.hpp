#pragma once

#include "chartfold/essay.hpp"

namespace chartfold {

// Degree-2 essay tracing the standard Seifert surface of a braid closure.
// In plat mode the strand count must be even and humps follow the bridges
// (strands/2 of them) instead of the strands.
Essay seifert_essay(const Word& beta, int strands, bool plat = false);

}  // namespace chartfold
