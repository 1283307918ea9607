#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idg/bounds.hpp"

using namespace idg;

TEST_CASE("h_bound") {
  CHECK(h_bound(Rat(1)) == 40);
  CHECK(h_bound(Rat(2)) == 204);
  CHECK(h_bound(Rat(3)) == 592);
  CHECK_THROWS_AS(h_bound(make_rat(1, 2)), std::invalid_argument);

  Rat prev(0);
  Int last(0);
  for (long n = 2; n <= 20; ++n) {
    Rat d = make_rat(n, 2);
    Int h = h_bound(d);
    CHECK(h >= last);
    last = h;
    prev = d;
  }
}

TEST_CASE("n_bound") {
  CHECK(n_bound(3) == 36);
  CHECK(n_bound(0) == 0);
  CHECK(n_bound(12) == 576);
}

TEST_CASE("f_bound") {
  BoundTable table;
  CHECK(table.f_bound(3) == 0);
  Int last(0);
  for (long p = 3; p <= 14; ++p) {
    Int f = table.f_bound(p);
    CHECK(f >= last);
    last = f;
  }
}

TEST_CASE("f_bound agrees with an oracle recomputation") {
  BoundTable table;
  Int p(12);
  Int best(0);
  for (const auto& t : enumerate_integral_triangles(p)) {
    auto cands = extension_candidates(t);
    if (cands.size() < 3) continue;  // no triple, and the oracle needs a positive cap
    Int cap(0);
    for (const auto& s : cands)
      if (s.r1 > cap) cap = s.r1;
    auto sols = extension_oracle(t, cap);
    CHECK(sols.size() == cands.size());
    PlacedTriangle placed = place_triangle(t);
    for (size_t i = 0; i < sols.size(); ++i)
      for (size_t j = i + 1; j < sols.size(); ++j)
        for (size_t l = j + 1; l < sols.size(); ++l) {
          const QuadPoint &u = sols[i].point, &v = sols[j].point, &w = sols[l].point;
          if (collinear(u, v, w)) continue;
          auto duv = integer_distance(placed.chart, u, v);
          auto duw = integer_distance(placed.chart, u, w);
          auto dvw = integer_distance(placed.chart, v, w);
          if (!duv || !duw || !dvw) continue;
          Int per = *duv + *duw + *dvw;
          if (per > best) best = per;
        }
  }
  CHECK(table.f_bound(p) == best);
}

TEST_CASE("l_bound") {
  BoundTable table;
  CHECK(table.l_bound(1, 3) == 36);
  CHECK(table.l_bound(2, 3) == 0);
  for (long p = 3; p <= 10; ++p) CHECK(table.l_bound(1, p) == 4 * p * p);
  for (long p = 3; p <= 9; ++p) CHECK(table.l_bound(2, p) <= table.l_bound(2, p + 1));
}

TEST_CASE("spine_n") {
  BoundTable table;
  CHECK(table.spine_n(1) == 1);
  CHECK(table.spine_n(2) == 1);
  CHECK(table.spine_n(3) == 1);
  for (int i = 1; i <= 5; ++i) {
    CHECK(table.spine_n(i) >= 1);
    if (i >= 3) CHECK(table.spine_n(i) - table.l_bound(i, i) == 1);
  }
}

TEST_CASE("f_star_bound") {
  BoundTable table;
  CHECK(table.f_star_bound(3, 1) == 3);
  CHECK(table.f_star_bound(3, 2) == 0);
  for (long p = 3; p <= 9; ++p)
    for (int i = 1; i <= 3; ++i)
      CHECK(table.f_star_bound(p, i) <= table.f_star_bound(p + 1, i));
}

TEST_CASE("apex_lower_bound") {
  ApexBoundCertificate cert = apex_lower_bound(5);
  CHECK(cert.excluded_separation == 0);
  CHECK(apex_lower_bound(200).excluded_separation == 1);
  CHECK(apex_lower_bound(1000).excluded_separation == 3);
  CHECK(!apex_lower_bound(1000).conclusion.empty());
  // Sandwich invariant: H(T) < bound <= H(T+1).
  for (long lb : {41, 100, 204, 205, 592, 593, 5000}) {
    Int t = apex_lower_bound(lb).excluded_separation;
    if (t >= 1) CHECK(h_bound(Rat(t)) < lb);
    CHECK(h_bound(Rat(t + 1)) >= lb);
  }
}
