#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>

#include "idg/triangle.hpp"

using namespace idg;

TEST_CASE("constructor enforces ordering and integer nondegeneracy") {
  CHECK_NOTHROW(IntegralTriangle(1, 1, 1));
  CHECK_NOTHROW(IntegralTriangle(2, 3, 4));
  CHECK_THROWS_AS(IntegralTriangle(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(IntegralTriangle(2, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(IntegralTriangle(3, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(IntegralTriangle(0, 1, 1), std::invalid_argument);
}

TEST_CASE("derived triangle data") {
  IntegralTriangle t(2, 3, 4);
  CHECK(t.perimeter() == 9);
  CHECK(t.heron_product() == 135);
  CHECK(t.area2() == make_rat(135, 16));
  CHECK(t.characteristic() == 15);
  CHECK(IntegralTriangle(3, 4, 5).characteristic() == 1);
  CHECK(IntegralTriangle(1, 1, 1).characteristic() == 3);
}

TEST_CASE("enumerate_integral_triangles") {
  CHECK(enumerate_integral_triangles(2).empty());

  auto only = enumerate_integral_triangles(3);
  REQUIRE(only.size() == 1);
  CHECK(only[0].a == 1);
  CHECK(only[0].b == 1);
  CHECK(only[0].c == 1);

  auto upto9 = enumerate_integral_triangles(9);
  std::vector<std::array<long, 3>> expected = {{1, 1, 1}, {1, 2, 2}, {2, 2, 2}, {1, 3, 3},
                                               {2, 2, 3}, {2, 3, 3}, {3, 3, 3}, {1, 4, 4},
                                               {2, 3, 4}};
  // Sorted by (c, a, b).
  REQUIRE(upto9.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(upto9[i].a == expected[i][0]);
    CHECK(upto9[i].b == expected[i][1]);
    CHECK(upto9[i].c == expected[i][2]);
  }
  for (size_t i = 1; i < upto9.size(); ++i) {
    auto key = [](const IntegralTriangle& t) { return std::array<Int, 3>{t.c, t.a, t.b}; };
    CHECK(key(upto9[i - 1]) < key(upto9[i]));
  }
}

TEST_CASE("per-perimeter counts stay below p^2") {
  std::map<Int, long> counts;
  for (const auto& t : enumerate_integral_triangles(60)) ++counts[t.perimeter()];
  for (const auto& [p, count] : counts) CHECK(count < p * p);
  CHECK(counts[Int(3)] == 1);
  CHECK(counts[Int(4)] == 0);
}

TEST_CASE("place_triangle examples") {
  PlacedTriangle placed = place_triangle(IntegralTriangle(3, 4, 5));
  CHECK(placed.chart.k == 1);
  CHECK(placed.a_pt == QuadPoint{Rat(0), Rat(0)});
  CHECK(placed.b_pt == QuadPoint{Rat(5), Rat(0)});
  CHECK(placed.c_pt == QuadPoint{make_rat(16, 5), make_rat(12, 5)});

  placed = place_triangle(IntegralTriangle(1, 1, 1));
  CHECK(placed.chart.k == 3);
  CHECK(placed.c_pt == QuadPoint{make_rat(1, 2), make_rat(1, 2)});

  placed = place_triangle(IntegralTriangle(2, 3, 4));
  CHECK(placed.chart.k == 15);
  CHECK(placed.b_pt == QuadPoint{Rat(4), Rat(0)});
  CHECK(placed.c_pt == QuadPoint{make_rat(21, 8), make_rat(3, 8)});
}

TEST_CASE("placement reproduces the side lengths") {
  for (const auto& t : enumerate_integral_triangles(40)) {
    PlacedTriangle placed = place_triangle(t);
    CHECK(*integer_distance(placed.chart, placed.a_pt, placed.b_pt) == t.c);
    CHECK(*integer_distance(placed.chart, placed.a_pt, placed.c_pt) == t.b);
    CHECK(*integer_distance(placed.chart, placed.b_pt, placed.c_pt) == t.a);
    CHECK(placed.c_pt.y > 0);
    Rat x = placed.c_pt.x, y = placed.c_pt.y;
    CHECK(Rat(placed.chart.k) * y * y == Rat(t.b * t.b) - x * x);
  }
}

TEST_CASE("min_height_squared") {
  CHECK(min_height_squared(IntegralTriangle(1, 1, 1)) == make_rat(3, 4));
  CHECK(min_height_squared(IntegralTriangle(2, 2, 3)) == make_rat(7, 4));
  CHECK(min_height_squared(IntegralTriangle(2, 3, 4)) == make_rat(135, 64));
  CHECK(min_height_squared(IntegralTriangle(3, 4, 5)) == make_rat(144, 25));
}

TEST_CASE("height bound with its equality profile") {
  for (const auto& t : enumerate_integral_triangles(60)) {
    CHECK(height_bound_check(t));
    bool equality = min_height_squared(t) == Rat(t.a) - make_rat(1, 4);
    bool profile = t.a == t.b && t.c == 2 * t.a - 1;
    CHECK(equality == profile);
  }
}
