#pragma once

#include <iosfwd>
#include <optional>

#include "idg/triangle.hpp"

namespace idg {

// Display is the sole place floating point is permitted; everything else in
// the library stays exact.
struct SvgOptions {
  double width = 640;
  double height = 480;
  double margin = 32;
  // When set, draw the two hyperbola families of the placed triangle
  // (difference values 0..c and 0..b) behind the points.
  std::optional<IntegralTriangle> hyperbola_triangle;
};

void render_svg(std::ostream& out, const PointSet& ps, const SvgOptions& options = {});

}  // namespace idg
