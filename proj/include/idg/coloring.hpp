#pragma once

#include <string>
#include <vector>

#include "idg/bounds.hpp"

namespace idg {

// Proper coloring of a set of points all at integer distance from two foci.
struct ColoringCertificate {
  Chart chart;
  QuadPoint focus1;
  QuadPoint focus2;
  Rat threshold;  // d' = |F1F2|^2 + 1
  std::vector<QuadPoint> points;
  std::vector<std::string> colors;  // parallel to points
  Int color_count;
  Int color_cap;  // h_bound at (the ceiling of) the focal distance
};

// Three-round construction: (difference value, arc) classes, then a greedy
// proper coloring inside each class of the graph joining points at integer
// distance below the threshold, then unique override colors for points closer
// than the threshold to either focus. Properness is verified exhaustively
// before returning; a failure is a logic error.
ColoringCertificate common_neighbor_coloring(const Chart& chart, const QuadPoint& f1,
                                             const QuadPoint& f2,
                                             const std::vector<QuadPoint>& pts);

// Points at integer distance from both (0,0) and (c,0) in the given chart,
// excluding the foci and the focal axis, found by sweeping radius pairs
// r1 <= r1_cap. Both mirror images are included.
std::vector<QuadPoint> axis_common_neighbors(const Chart& chart, const Int& c, const Int& r1_cap);

}  // namespace idg
