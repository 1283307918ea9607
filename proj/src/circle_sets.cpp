#include "idg/circle_sets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace idg {

std::vector<PythAngle> pythagorean_angles(int count) {
  if (count < 1) throw std::invalid_argument("pythagorean_angles: count must be >= 1");
  std::vector<PythAngle> out;
  for (Int m = 2; (int)out.size() < count; ++m) {
    for (Int n = 1; n < m && (int)out.size() < count; ++n) {
      if ((m + n) % 2 == 0) continue;  // opposite parity
      Int g;
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
      if (g != 1) continue;
      Int leg1 = 2 * m * n;
      Int leg2 = m * m - n * n;
      Int hyp = m * m + n * n;
      PythAngle angle;
      angle.m = m;
      angle.n = n;
      angle.s = make_rat(leg1 < leg2 ? leg1 : leg2, hyp);
      angle.c = make_rat(leg1 < leg2 ? leg2 : leg1, hyp);
      out.push_back(angle);
    }
  }
  return out;
}

PointSet rational_circle_points(int n) {
  if (n < 2) throw std::invalid_argument("rational_circle_points: need n >= 2");
  PointSet ps;
  ps.chart = Chart{1};
  for (const PythAngle& a : pythagorean_angles(n)) {
    // Angle doubling keeps chords of the form 2|s_i c_j - c_i s_j| rational.
    ps.points.push_back(QuadPoint{a.c * a.c - a.s * a.s, 2 * a.s * a.c});
  }
  return ps;
}

ScaledPointSet scale_to_integral(const PointSet& ps) {
  Int lcm = 1;
  for (size_t i = 0; i < ps.points.size(); ++i)
    for (size_t j = i + 1; j < ps.points.size(); ++j) {
      auto chord = rational_distance(ps.chart, ps.points[i], ps.points[j]);
      if (!chord)
        throw std::invalid_argument("scale_to_integral: pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not at rational distance");
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), chord->get_den().get_mpz_t());
    }
  ScaledPointSet out;
  out.factor = lcm;
  out.points.chart = ps.chart;
  for (const QuadPoint& p : ps.points)
    out.points.points.push_back(QuadPoint{p.x * Rat(lcm), p.y * Rat(lcm)});
  return out;
}

Rat ptolemy_deduce(const Rat& pr, const Rat& qs, const Rat& ps, const Rat& qr, const Rat& rs) {
  if (rs == 0) throw std::invalid_argument("ptolemy_deduce: zero side RS");
  Rat pq = (pr * qs - ps * qr) / rs;
  if (pq <= 0)
    throw std::invalid_argument("ptolemy_deduce: nonpositive result, inconsistent orientation");
  return pq;
}

DistanceGraph nonrational_graph(int n_core) {
  if (n_core < 1) throw std::invalid_argument("nonrational_graph: need a nonempty core");
  DistanceGraph g(n_core + 8);
  for (int i = 0; i < n_core; ++i)
    for (int j = i + 1; j < n_core; ++j) g.add_edge(i, j);
  for (int wing = 0; wing < 2; ++wing) {
    int base = n_core + 4 * wing;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) g.add_edge(base + i, base + j);
      for (int v = 0; v < n_core; ++v) g.add_edge(base + i, v);
    }
  }
  return g;
}

bool NonRationalityTranscript::verified() const {
  if (steps.empty()) return false;
  for (const TranscriptStep& s : steps)
    if (!s.checked) return false;
  return true;
}

NonRationalityTranscript nonrationality_transcript(int n_core) {
  if (n_core < 9)
    throw std::invalid_argument(
        "nonrationality_transcript: need N >= 9; for smaller N the two circles carry fewer "
        "than 3 shared points and need not coincide");
  const int N = n_core;
  NonRationalityTranscript tr;
  tr.n_core = N;
  tr.graph = nonrational_graph(N);

  auto step = [&](const std::string& text, bool ok) { tr.steps.push_back({text, ok}); };
  auto num = [](long v) { return std::to_string(v); };

  step("each of the two (N+4)-cliques = " + num(N + 4) +
           " vertices realizes as a rational point set",
       tr.graph.vertex_count() == N + 8);
  step("a realization forbids 3 collinear points, so 'all but at most 4 on a line' would need " +
           num(N) + " >= 3 collinear points of the clique; impossible",
       N >= 3);
  step("hence all but at most 3 of each clique are concyclic: >= " + num(N + 1) + " of " +
           num(N + 4) + " points on a circle",
       N + 1 == (N + 4) - 3);
  step("each circle carries >= " + num(N - 3) + " core points (at most 4 clique points are wing "
           "points)",
       N - 3 == (N + 1) - 4);
  step("the circles share >= " + num(N - 3) + " + " + num(N - 3) + " - " + num(N) + " = " +
           num(N - 6) + " >= 3 core points, so they coincide",
       N - 6 >= 3);
  step("each wing has >= 1 vertex on the common circle (at most 3 clique points are off it); "
           "pick P in wing 1, Q in wing 2, core points R, S on the circle",
       4 - 3 >= 1 && N - 6 >= 2);

  // Concrete instantiation of the deduction: four constructed circle points
  // in convex order; five rational distances force the sixth.
  PointSet circle = rational_circle_points(4);
  const Chart& chart = circle.chart;
  const QuadPoint& P = circle.points[0];
  const QuadPoint& Q = circle.points[1];
  const QuadPoint& R = circle.points[2];
  const QuadPoint& S = circle.points[3];
  bool ok = false;
  std::ostringstream text;
  // Try the labelings of the quadruple until one is in convex cyclic order.
  const QuadPoint* quad[4] = {&P, &Q, &R, &S};
  std::sort(quad, quad + 4, [&](const QuadPoint* u, const QuadPoint* v) {
    // order by angle via cross products around the centroid; the unit circle
    // points here are all distinct, so sorting by (y sign, x) suffices
    if ((u->y >= 0) != (v->y >= 0)) return (u->y >= 0);
    return (u->y >= 0) ? u->x > v->x : u->x < v->x;
  });
  {
    auto d = [&](const QuadPoint* u, const QuadPoint* v) {
      auto r = rational_distance(chart, *u, *v);
      if (!r) throw std::logic_error("nonrationality_transcript: irrational chord");
      return *r;
    };
    // quad[0..3] in convex order with diagonals quad[0]quad[2], quad[1]quad[3].
    Rat pr = d(quad[0], quad[2]);
    Rat qs = d(quad[1], quad[3]);
    Rat ps = d(quad[0], quad[3]);
    Rat qr = d(quad[1], quad[2]);
    Rat rs = d(quad[2], quad[3]);
    Rat deduced = ptolemy_deduce(pr, qs, ps, qr, rs);
    Rat actual = d(quad[0], quad[1]);
    ok = deduced == actual;
    text << "for concyclic P,Q,R,S the five rational distances force the sixth: PQ = "
         << "(PR*QS - PS*QR)/RS; instance: (" << to_string(pr) << "*" << to_string(qs) << " - "
         << to_string(ps) << "*" << to_string(qr) << ")/" << to_string(rs) << " = "
         << to_string(deduced);
  }
  step(text.str(), ok);
  step("PQ rational contradicts the missing wing-to-wing edge; the graph has no rational "
           "realization under the hypothesis",
       !tr.graph.has_edge(N, N + 4));
  return tr;
}

}  // namespace idg
