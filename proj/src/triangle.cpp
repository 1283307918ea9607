#include "idg/triangle.hpp"

#include <stdexcept>

namespace idg {

IntegralTriangle::IntegralTriangle(Int a_, Int b_, Int c_) : a(a_), b(b_), c(c_) {
  if (a < 1 || !(a <= b && b <= c))
    throw std::invalid_argument("IntegralTriangle: sides must satisfy 1 <= a <= b <= c");
  if (a + b < c + 1) throw std::invalid_argument("IntegralTriangle: a + b >= c + 1 violated");
}

Int IntegralTriangle::heron_product() const {
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

Int IntegralTriangle::characteristic() const { return squarefree_part(heron_product()).squarefree; }

std::vector<IntegralTriangle> enumerate_integral_triangles(const Int& p_max) {
  std::vector<IntegralTriangle> out;
  // a + b >= c + 1 forces perimeter >= 2c + 1.
  for (Int c = 1; 2 * c + 1 <= p_max; ++c) {
    for (Int a = 1; a <= c; ++a) {
      Int b_lo = c + 1 - a;
      if (b_lo < a) b_lo = a;
      for (Int b = b_lo; b <= c && a + b + c <= p_max; ++b) out.emplace_back(a, b, c);
    }
  }
  return out;
}

PlacedTriangle place_triangle(const IntegralTriangle& t) {
  Chart chart{t.characteristic()};
  Rat x = make_rat(t.b * t.b + t.c * t.c - t.a * t.a, 2 * t.c);
  Rat ky2 = Rat(t.b * t.b) - x * x;  // k * y^2
  Rat y2 = ky2 / Rat(chart.k);
  auto y = perfect_square_root(y2);
  if (!y || *y <= 0)
    throw std::logic_error("place_triangle: height is not rational in the triangle's chart");
  return {t, chart, QuadPoint{Rat(0), Rat(0)}, QuadPoint{Rat(t.c), Rat(0)}, QuadPoint{x, *y}};
}

Rat min_height_squared(const IntegralTriangle& t) {
  return make_rat(t.heron_product(), 4 * t.c * t.c);
}

bool height_bound_check(const IntegralTriangle& t) {
  return min_height_squared(t) >= Rat(t.a) - make_rat(1, 4);
}

}  // namespace idg
