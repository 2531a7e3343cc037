#pragma once

#include <string>

#include "chartfold/essay.hpp"

namespace chartfold {

// Deterministic SVG: time runs left to right, word positions top to bottom.
// Arcs are colored by conjugated label ((12) blue, (23) red, (13) green),
// nodes drawn as solid squares.
std::string render_svg(const ChartMovie& c);
std::string render_svg(const Essay& e);

}  // namespace chartfold
