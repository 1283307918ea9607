#pragma once

#include <string>
#include <vector>

#include "idg/graph.hpp"

namespace idg {

// Exact sine/cosine of a half-angle, generated from a primitive pair (m, n).
struct PythAngle {
  Rat s;
  Rat c;
  Int m;
  Int n;
};

// The first `count` angles from primitive generator pairs (m > n >= 1,
// coprime, opposite parity) in lexicographic (m, n) order, with the canonical
// choice s = min(2mn, m^2 - n^2) / (m^2 + n^2).
std::vector<PythAngle> pythagorean_angles(int count);

// n distinct unit-circle points (c^2 - s^2, 2sc) in the rational plane; every
// chord 2|s_i c_j - c_i s_j| is rational and no three points are collinear.
PointSet rational_circle_points(int n);

struct ScaledPointSet {
  PointSet points;
  Int factor;  // least common multiple of all chord denominators
};

// Scales a rational-chord point set so every pairwise distance is a positive
// integer. Rejects input with a non-rational pairwise distance.
ScaledPointSet scale_to_integral(const PointSet& ps);

// Sixth distance of a convex cyclic quadrilateral P,Q,R,S with diagonals PR
// and QS: PQ = (PR*QS - PS*QR) / RS. Rejects RS = 0 and nonpositive results.
Rat ptolemy_deduce(const Rat& pr, const Rat& qs, const Rat& ps, const Rat& qr, const Rat& rs);

// Shared core K_N plus two disjoint 4-cliques, each joined completely to the
// core; no edges between the two 4-sets. Vertices 0..N-1 core, then the wings.
DistanceGraph nonrational_graph(int n_core);

struct TranscriptStep {
  std::string text;
  bool checked;
};

// Machine-checked case analysis showing that a rational realization of
// nonrational_graph(N) forces a rational distance across the missing wing
// edges, provided every sufficiently large rational point set has all but at
// most four points on a line or all but at most three on a circle. Requires
// N >= 9 so the two circles are forced to coincide.
struct NonRationalityTranscript {
  int n_core;
  DistanceGraph graph;
  std::vector<TranscriptStep> steps;
  bool verified() const;
};

NonRationalityTranscript nonrationality_transcript(int n_core);

}  // namespace idg
