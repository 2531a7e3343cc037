#pragma once
#include "movie.hpp"

namespace chartfold {

struct CoverInvariants {
  int components = 0;
  std::vector<std::vector<int>> component_orbits;  // sheets per component
  int euler_closed = 0;                            // of the closed extension
  std::vector<int> genus_per_component;
  int boundary_circles = 0;  // of the disk cover
};

// invariants from the monodromy data (orbit counting + Riemann-Hurwitz)
CoverInvariants cover_invariants(const ChartMovie& c);

// independent oracle: an honest cell structure of the covering surface,
// built by cellulating the base sphere along slice lines and lifting sheet
// by sheet with raw transposition gluing across arc edges
struct CellComplex {
  long long vertices = 0, edges = 0, faces = 0;
  long long base_euler = 0;  // sphere sanity value, always 2
  int components = 0;
  std::vector<std::vector<int>> component_sheets;
  std::vector<long long> component_euler;
  long long euler() const { return vertices - edges + faces; }
};
CellComplex build_cell_complex(const ChartMovie& c);

struct FoldingClass {
  bool embedded = false;
  int node_count = 0;  // of the semi-orientation when not embedded
};
FoldingClass folding_class(const ChartMovie& c);

}  // namespace chartfold
