#pragma once

#include <optional>
#include <vector>

#include "idg/triangle.hpp"

namespace idg {

enum class BasePair { ab, ac, bc };

// One point at integer distance from all three base vertices.
struct ExtensionSolution {
  QuadPoint point;
  Int r1;  // distance to A
  Int r2;  // distance to B
  Int r3;  // distance to C
  std::vector<BasePair> collinear_with;
};

// Loop-iteration bound 4(c+1)(b+1) on the number of extension points.
Int count_bound(const IntegralTriangle& t);

// Complete enumeration of the points at integer distance from the three
// vertices of a placed, non-collinear triple. The difference pairs
// (D1, s1, D2, s2) with |XA|-|XB| = s1*D1, |XA|-|XC| = s2*D2 index the two
// hyperbola families; each choice reduces to a 2x2 linear solve plus one
// quadratic in r = |XA|. A and B, A and C must be at integer distance.
// Results exclude A, B, C, are deduplicated, sorted by (r1, r2, r3, x, y),
// and carry collinearity flags for each base pair.
std::vector<ExtensionSolution> extension_points(const Chart& chart, const QuadPoint& a,
                                                const QuadPoint& b, const QuadPoint& c);

// extension_points applied to the canonical placement of t.
std::vector<ExtensionSolution> extension_candidates(const IntegralTriangle& t);

// Independent brute force over radius pairs (r1, r2) with r1 <= r_cap; used as
// the completeness oracle for extension_candidates.
std::vector<ExtensionSolution> extension_oracle(const IntegralTriangle& t, const Int& r_cap);

enum class PositionMode { no3line, no3line_no4circle };

bool satisfies_position_mode(const PointSet& ps, PositionMode mode);

// All extensions of `base` to target_size points with pairwise integer
// distances, max distance <= diameter_cap, and the position constraints.
// Requires a non-collinear triple in base.
std::vector<PointSet> grow_cliques(const PointSet& base, int target_size, const Int& diameter_cap,
                                   PositionMode mode);

struct DiameterResult {
  Int diameter;
  PointSet witness;
};

// Minimum over all integral n-point sets in the given mode with diameter
// <= diameter_cap of the maximum pairwise distance, with a witness.
// Exhaustive over base triangles with c <= diameter_cap. The result is a
// minimum under a total order, so it is identical for any worker count.
std::optional<DiameterResult> min_diameter_search(int n, const Int& diameter_cap,
                                                  PositionMode mode, int jobs = 1);

// Sorted multiset of the pairwise integer distances of an integral point set.
std::vector<Int> distance_multiset(const PointSet& ps);

}  // namespace idg
