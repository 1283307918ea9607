#pragma once

#include <vector>

#include "idg/chart.hpp"

namespace idg {

// Integer sides a <= b <= c with a + b >= c + 1 (integer nondegeneracy).
struct IntegralTriangle {
  Int a;
  Int b;
  Int c;

  IntegralTriangle(Int a_, Int b_, Int c_);

  Int perimeter() const { return a + b + c; }
  // (a+b+c)(-a+b+c)(a-b+c)(a+b-c) = 16 * area^2
  Int heron_product() const;
  Rat area2() const { return make_rat(heron_product(), 16); }
  // Squarefree part of the Heron product; the chart radicand of the triangle.
  Int characteristic() const;
};

// All triangles with perimeter <= p_max, each once, ordered by (c, a, b).
std::vector<IntegralTriangle> enumerate_integral_triangles(const Int& p_max);

// Canonical placement: A = (0,0), B = (c,0), C in the upper half plane, in the
// chart of the triangle's characteristic. |AB| = c, |AC| = b, |BC| = a.
struct PlacedTriangle {
  IntegralTriangle triangle;
  Chart chart;
  QuadPoint a_pt;
  QuadPoint b_pt;
  QuadPoint c_pt;
};

PlacedTriangle place_triangle(const IntegralTriangle& t);

// Squared height on the longest side c; the smallest of the three heights.
Rat min_height_squared(const IntegralTriangle& t);

// min_height_squared(t) >= a - 1/4, exactly.
bool height_bound_check(const IntegralTriangle& t);

}  // namespace idg
