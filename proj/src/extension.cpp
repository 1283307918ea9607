#include "idg/extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace idg {

Int count_bound(const IntegralTriangle& t) { return 4 * (t.c + 1) * (t.b + 1); }

namespace {

void flag_collinearity(ExtensionSolution& sol, const QuadPoint& a, const QuadPoint& b,
                       const QuadPoint& c) {
  if (collinear(sol.point, a, b)) sol.collinear_with.push_back(BasePair::ab);
  if (collinear(sol.point, a, c)) sol.collinear_with.push_back(BasePair::ac);
  if (collinear(sol.point, b, c)) sol.collinear_with.push_back(BasePair::bc);
}

bool solution_less(const ExtensionSolution& u, const ExtensionSolution& v) {
  if (u.r1 != v.r1) return u.r1 < v.r1;
  if (u.r2 != v.r2) return u.r2 < v.r2;
  if (u.r3 != v.r3) return u.r3 < v.r3;
  return point_less(u.point, v.point);
}

}  // namespace

std::vector<ExtensionSolution> extension_points(const Chart& chart, const QuadPoint& a,
                                                const QuadPoint& b, const QuadPoint& c) {
  if (collinear(a, b, c)) throw std::invalid_argument("extension_points: collinear base triple");
  auto dab = integer_distance(chart, a, b);
  auto dac = integer_distance(chart, a, c);
  if (!dab || !dac)
    throw std::invalid_argument("extension_points: base distances |AB|, |AC| must be integers");

  Rat k(chart.k);
  Rat na = a.x * a.x + k * a.y * a.y;
  Rat nb = b.x * b.x + k * b.y * b.y;
  Rat nc = c.x * c.x + k * c.y * c.y;

  // 2(B-A) . X_weighted = nb - na + 2 s1 D1 r - D1^2, same for C.
  Rat m11 = 2 * (b.x - a.x), m12 = 2 * k * (b.y - a.y);
  Rat m21 = 2 * (c.x - a.x), m22 = 2 * k * (c.y - a.y);
  Rat det = m11 * m22 - m12 * m21;
  // det = 4k * cross(A,B,C), nonzero for a non-collinear triple.

  std::map<QuadPoint, ExtensionSolution, QuadPointLess> found;

  for (Int d1 = 0; d1 <= *dab; ++d1) {
    for (int s1 : {+1, -1}) {
      if (d1 == 0 && s1 < 0) continue;
      for (Int d2 = 0; d2 <= *dac; ++d2) {
        for (int s2 : {+1, -1}) {
          if (d2 == 0 && s2 < 0) continue;
          Rat u1 = nb - na - Rat(d1 * d1), v1 = Rat(2 * s1 * d1);
          Rat u2 = nc - na - Rat(d2 * d2), v2 = Rat(2 * s2 * d2);
          // X = X0 + X1 * r by Cramer's rule.
          Rat x0 = (u1 * m22 - m12 * u2) / det, x1 = (v1 * m22 - m12 * v2) / det;
          Rat y0 = (m11 * u2 - u1 * m21) / det, y1 = (m11 * v2 - v1 * m21) / det;
          // (x - ax)^2 + k (y - ay)^2 = r^2.
          Rat gx = x0 - a.x, gy = y0 - a.y;
          Rat q2 = x1 * x1 + k * y1 * y1 - 1;
          Rat q1 = 2 * (gx * x1 + k * gy * y1);
          Rat q0 = gx * gx + k * gy * gy;

          std::vector<Rat> roots;
          if (q2 == 0) {
            if (q1 == 0) {
              if (q0 == 0)
                throw std::logic_error("extension_points: identically zero radius equation");
              continue;
            }
            roots.push_back(-q0 / q1);
          } else {
            Rat disc = q1 * q1 - 4 * q2 * q0;
            if (disc < 0) continue;
            auto sq = perfect_square_root(disc);
            if (!sq) continue;  // irrational roots cannot be integers
            roots.push_back((-q1 + *sq) / (2 * q2));
            if (*sq != 0) roots.push_back((-q1 - *sq) / (2 * q2));
          }

          for (const Rat& r : roots) {
            if (!is_integer(r)) continue;
            Int r1 = r.get_num();
            Int r2 = r1 - s1 * d1;
            Int r3 = r1 - s2 * d2;
            if (r1 < 1 || r2 < 1 || r3 < 1) continue;
            ExtensionSolution sol;
            sol.point = QuadPoint{x0 + x1 * r, y0 + y1 * r};
            sol.r1 = r1;
            sol.r2 = r2;
            sol.r3 = r3;
            if (sol.point == a || sol.point == b || sol.point == c) continue;
            // Chart closure plus radius re-verification.
            if (dist2(chart, sol.point, a) != Rat(r1 * r1) ||
                dist2(chart, sol.point, b) != Rat(r2 * r2) ||
                dist2(chart, sol.point, c) != Rat(r3 * r3))
              throw std::logic_error("extension_points: reconstructed point fails re-verification");
            flag_collinearity(sol, a, b, c);
            found.emplace(sol.point, std::move(sol));
          }
        }
      }
    }
  }

  std::vector<ExtensionSolution> out;
  out.reserve(found.size());
  for (auto& [_, sol] : found) out.push_back(sol);
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

std::vector<ExtensionSolution> extension_candidates(const IntegralTriangle& t) {
  PlacedTriangle placed = place_triangle(t);
  return extension_points(placed.chart, placed.a_pt, placed.b_pt, placed.c_pt);
}

std::vector<ExtensionSolution> extension_oracle(const IntegralTriangle& t, const Int& r_cap) {
  if (r_cap < 1) throw std::invalid_argument("extension_oracle: r_cap must be >= 1");
  PlacedTriangle placed = place_triangle(t);
  const Chart& chart = placed.chart;
  Rat k(chart.k);
  std::vector<ExtensionSolution> out;
  for (Int r1 = 1; r1 <= r_cap; ++r1) {
    Int r2_lo = r1 > t.c ? Int(r1 - t.c) : Int(1);
    for (Int r2 = r2_lo; r2 <= r1 + t.c; ++r2) {
      Rat x = make_rat(r1 * r1 - r2 * r2 + t.c * t.c, 2 * t.c);
      Rat y2 = (Rat(r1 * r1) - x * x) / k;
      if (y2 < 0) continue;
      auto y = perfect_square_root(y2);
      if (!y) continue;
      std::vector<QuadPoint> pts;
      pts.push_back(QuadPoint{x, *y});
      if (*y != 0) pts.push_back(QuadPoint{x, -*y});
      for (const QuadPoint& p : pts) {
        if (p == placed.c_pt) continue;
        auto r3 = integer_distance(chart, p, placed.c_pt);
        if (!r3) continue;
        ExtensionSolution sol;
        sol.point = p;
        sol.r1 = r1;
        sol.r2 = r2;
        sol.r3 = *r3;
        flag_collinearity(sol, placed.a_pt, placed.b_pt, placed.c_pt);
        out.push_back(std::move(sol));
      }
    }
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

bool satisfies_position_mode(const PointSet& ps, PositionMode mode) {
  const auto& pts = ps.points;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t l = j + 1; l < n; ++l)
        if (collinear(pts[i], pts[j], pts[l])) return false;
  if (mode == PositionMode::no3line_no4circle) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t l = j + 1; l < n; ++l)
          for (size_t m = l + 1; m < n; ++m)
            if (concyclic_det(ps.chart, pts[i], pts[j], pts[l], pts[m]) == 0) return false;
  }
  return true;
}

namespace {

// Max pairwise distance; nullopt when some pair is not at integer distance.
std::optional<Int> integral_diameter(const PointSet& ps) {
  Int best = 0;
  for (size_t i = 0; i < ps.points.size(); ++i)
    for (size_t j = i + 1; j < ps.points.size(); ++j) {
      auto d = integer_distance(ps.chart, ps.points[i], ps.points[j]);
      if (!d) return std::nullopt;
      if (*d > best) best = *d;
    }
  return best;
}

}  // namespace

std::vector<PointSet> grow_cliques(const PointSet& base, int target_size, const Int& diameter_cap,
                                   PositionMode mode) {
  if (base.points.size() < 3)
    throw std::invalid_argument("grow_cliques: base must have at least 3 points");
  size_t bi = 0, bj = 0, bl = 0;
  bool have_triple = false;
  for (size_t i = 0; i < base.points.size() && !have_triple; ++i)
    for (size_t j = i + 1; j < base.points.size() && !have_triple; ++j)
      for (size_t l = j + 1; l < base.points.size() && !have_triple; ++l)
        if (!collinear(base.points[i], base.points[j], base.points[l])) {
          bi = i;
          bj = j;
          bl = l;
          have_triple = true;
        }
  if (!have_triple) throw std::invalid_argument("grow_cliques: all base triples are collinear");

  std::vector<PointSet> out;
  auto base_diam = integral_diameter(base);
  if (!base_diam) throw std::invalid_argument("grow_cliques: base is not an integral point set");
  if (*base_diam > diameter_cap) return out;
  if ((int)base.points.size() > target_size) return out;

  // Any point at integer distance to all of base is at integer distance to the
  // chosen triple, hence in this complete pool.
  auto pool_all =
      extension_points(base.chart, base.points[bi], base.points[bj], base.points[bl]);
  std::vector<QuadPoint> pool;
  for (const auto& sol : pool_all) {
    bool ok = true;
    for (const QuadPoint& p : base.points) {
      if (sol.point == p) {
        ok = false;
        break;
      }
      auto d = integer_distance(base.chart, sol.point, p);
      if (!d || *d > diameter_cap) {
        ok = false;
        break;
      }
    }
    if (ok) pool.push_back(sol.point);
  }
  std::sort(pool.begin(), pool.end(), point_less);

  size_t need = target_size - base.points.size();
  if (need == 0) {
    if (satisfies_position_mode(base, mode)) out.push_back(base);
    return out;
  }

  std::vector<size_t> pick;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (pick.size() == need) {
      PointSet candidate = base;
      for (size_t idx : pick) candidate.points.push_back(pool[idx]);
      if (!satisfies_position_mode(candidate, mode)) return;
      auto diam = integral_diameter(candidate);
      if (!diam || *diam > diameter_cap) return;
      out.push_back(std::move(candidate));
      return;
    }
    for (size_t idx = start; idx < pool.size(); ++idx) {
      bool compatible = true;
      for (size_t prev : pick) {
        auto d = integer_distance(base.chart, pool[prev], pool[idx]);
        if (!d || *d > diameter_cap) {
          compatible = false;
          break;
        }
      }
      if (!compatible) continue;
      pick.push_back(idx);
      self(self, idx + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Int> distance_multiset(const PointSet& ps) {
  std::vector<Int> dists;
  for (size_t i = 0; i < ps.points.size(); ++i)
    for (size_t j = i + 1; j < ps.points.size(); ++j) {
      auto d = integer_distance(ps.chart, ps.points[i], ps.points[j]);
      if (!d) throw std::invalid_argument("distance_multiset: non-integral pair");
      dists.push_back(*d);
    }
  std::sort(dists.begin(), dists.end());
  return dists;
}

namespace {

// Total order on witnesses: diameter, then distance multiset, then chart,
// then coordinates. Makes the search result independent of exploration order.
bool witness_less(const DiameterResult& u, const DiameterResult& v) {
  if (u.diameter != v.diameter) return u.diameter < v.diameter;
  auto du = distance_multiset(u.witness), dv = distance_multiset(v.witness);
  if (du != dv) return du < dv;
  if (u.witness.chart.k != v.witness.chart.k) return u.witness.chart.k < v.witness.chart.k;
  for (size_t i = 0; i < u.witness.points.size(); ++i) {
    if (!(u.witness.points[i] == v.witness.points[i]))
      return point_less(u.witness.points[i], v.witness.points[i]);
  }
  return false;
}

}  // namespace

std::optional<DiameterResult> min_diameter_search(int n, const Int& diameter_cap,
                                                  PositionMode mode, int jobs) {
  if (n < 3) throw std::invalid_argument("min_diameter_search: n must be >= 3");
  if (jobs < 1) jobs = 1;

  std::vector<IntegralTriangle> bases;
  for (Int c = 1; c <= diameter_cap; ++c)
    for (Int a = 1; a <= c; ++a) {
      Int b_lo = c + 1 - a;
      if (b_lo < a) b_lo = a;
      for (Int b = b_lo; b <= c; ++b) bases.emplace_back(a, b, c);
    }

  auto search_one = [&](const IntegralTriangle& t, std::optional<DiameterResult>& best) {
    auto consider = [&](const PointSet& ps) {
      auto diam = integral_diameter(ps);
      if (!diam || *diam > diameter_cap) return;
      DiameterResult cand{*diam, ps};
      if (!best || witness_less(cand, *best)) best = std::move(cand);
    };
    PlacedTriangle placed = place_triangle(t);
    PointSet base{placed.chart, {placed.a_pt, placed.b_pt, placed.c_pt}};
    if (n == 3) {
      if (satisfies_position_mode(base, mode)) consider(base);
      return;
    }
    for (const PointSet& grown : grow_cliques(base, n, diameter_cap, mode)) consider(grown);
  };

  std::vector<std::optional<DiameterResult>> partial(jobs);
  if (jobs == 1) {
    for (const auto& t : bases) search_one(t, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (size_t i = w; i < bases.size(); i += jobs) search_one(bases[i], partial[w]);
      });
    for (auto& th : workers) th.join();
  }

  std::optional<DiameterResult> best;
  for (auto& cand : partial)
    if (cand && (!best || witness_less(*cand, *best))) best = std::move(cand);
  return best;
}

}  // namespace idg
