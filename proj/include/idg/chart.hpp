#pragma once

#include <optional>
#include <vector>

#include "idg/rational.hpp"

namespace idg {

// The plane coordinatized as (x, y*sqrt(k)). k squarefree, k = 1 is the
// rational plane. All point sets of one pipeline share a single chart.
struct Chart {
  Int k{1};
  bool operator==(const Chart&) const = default;
};

struct QuadPoint {
  Rat x;
  Rat y;
  bool operator==(const QuadPoint& o) const { return x == o.x && y == o.y; }
};

// Strict (x, y) lexicographic order.
bool point_less(const QuadPoint& p, const QuadPoint& q);

struct QuadPointLess {
  bool operator()(const QuadPoint& p, const QuadPoint& q) const { return point_less(p, q); }
};

struct PointSet {
  Chart chart;
  std::vector<QuadPoint> points;
};

// (px-qx)^2 + k*(py-qy)^2, always rational.
Rat dist2(const Chart& chart, const QuadPoint& p, const QuadPoint& q);

// m iff dist2 = m^2 for a nonnegative integer m.
std::optional<Int> integer_distance(const Chart& chart, const QuadPoint& p, const QuadPoint& q);

// Exact rational distance, or nullopt when dist2 has no rational root.
std::optional<Rat> rational_distance(const Chart& chart, const QuadPoint& p, const QuadPoint& q);

// Chart collinearity equals Euclidean collinearity (y -> y*sqrt(k) is linear).
bool collinear(const QuadPoint& p, const QuadPoint& q, const QuadPoint& r);

// 4x4 determinant with rows [x^2 + k y^2, x, y, 1]; zero iff concyclic or
// degenerate. Exposed for subset sweeps that must not pay the precondition check.
Rat concyclic_det(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
                  const QuadPoint& s);

// True iff the four points lie on one circle. Rejects input with three
// collinear points.
bool concyclic(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
               const QuadPoint& s);

// No n-4 points on a line and no n-3 on a circle (constraints with fewer than
// 3 resp. 4 points are vacuous). Requires |ps| >= 4.
bool general_position(const PointSet& ps);

// Exact Ptolemy identity for p,q,r,s concyclic in convex cyclic order:
// with A = pr^2*qs^2, B = pq^2*rs^2, C = ps^2*qr^2, holds iff A >= B + C and
// (A - B - C)^2 = 4BC. Rejects non-concyclic input.
bool ptolemy_check(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
                   const QuadPoint& s);

// Locus |XF1 - XF2| = diff. diff = 0 is the perpendicular bisector and
// diff^2 = |F1F2|^2 gives two rays; both count as degenerate.
struct HyperbolaSpec {
  Chart chart;
  QuadPoint focus1;
  QuadPoint focus2;
  Rat diff;  // >= 0

  Rat focal_dist2() const;
  Rat semi_axis2() const;  // a^2 = diff^2 / 4
  bool degenerate() const;
};

// Exact membership test; valid for degenerate specs too.
bool hyperbola_membership(const HyperbolaSpec& h, const QuadPoint& p);

// One of the four arcs: branch by nearer focus, side by the sign of the
// coordinate orthogonal to the focal axis. Axis points are vertex cases and
// resolve deterministically to the positive side.
struct ArcClass {
  int near_focus;  // 1 or 2
  int side;        // +1 or -1
  bool vertex;
  bool operator==(const ArcClass&) const = default;
};

// Requires a nondegenerate spec and p on the hyperbola.
ArcClass arc_class(const HyperbolaSpec& h, const QuadPoint& p);

struct SecantIntercept {
  QuadPoint point;       // intersection of line pq with the focal axis
  Rat signed_coord2;     // sign * squared Euclidean axis coordinate, center at origin
  bool within_interval;  // |coord| <= a, compared exactly via squares
};

// Intersection of the secant through two same-arc points with the focal axis.
// Rejects p = q and pairs on different arcs; nullopt when line pq is parallel
// to the focal axis.
std::optional<SecantIntercept> secant_axis_intercept(const HyperbolaSpec& h, const QuadPoint& p,
                                                     const QuadPoint& q);

}  // namespace idg
