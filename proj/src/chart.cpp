#include "idg/chart.hpp"

#include <stdexcept>

namespace idg {

bool point_less(const QuadPoint& p, const QuadPoint& q) {
  int cx = cmp(p.x, q.x);
  if (cx != 0) return cx < 0;
  return cmp(p.y, q.y) < 0;
}

Rat dist2(const Chart& chart, const QuadPoint& p, const QuadPoint& q) {
  Rat dx = p.x - q.x;
  Rat dy = p.y - q.y;
  return dx * dx + Rat(chart.k) * dy * dy;
}

std::optional<Int> integer_distance(const Chart& chart, const QuadPoint& p, const QuadPoint& q) {
  Rat d2 = dist2(chart, p, q);
  if (!is_integer(d2)) return std::nullopt;
  const Int& n = d2.get_num();
  if (!is_perfect_square(n)) return std::nullopt;
  return integer_sqrt_floor(n);
}

std::optional<Rat> rational_distance(const Chart& chart, const QuadPoint& p, const QuadPoint& q) {
  return perfect_square_root(dist2(chart, p, q));
}

namespace {

Rat cross(const QuadPoint& origin, const QuadPoint& u, const QuadPoint& v) {
  return (u.x - origin.x) * (v.y - origin.y) - (u.y - origin.y) * (v.x - origin.x);
}

}  // namespace

bool collinear(const QuadPoint& p, const QuadPoint& q, const QuadPoint& r) {
  return cross(p, q, r) == 0;
}

Rat concyclic_det(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
                  const QuadPoint& s) {
  // Rows [x^2 + k y^2, x, y, 1]; subtract the last row and expand the 3x3.
  Rat k(chart.k);
  auto w = [&](const QuadPoint& t) -> Rat { return t.x * t.x + k * t.y * t.y; };
  Rat w0 = w(s);
  Rat a1 = w(p) - w0, b1 = p.x - s.x, c1 = p.y - s.y;
  Rat a2 = w(q) - w0, b2 = q.x - s.x, c2 = q.y - s.y;
  Rat a3 = w(r) - w0, b3 = r.x - s.x, c3 = r.y - s.y;
  return a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2);
}

bool concyclic(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
               const QuadPoint& s) {
  const QuadPoint* pts[4] = {&p, &q, &r, &s};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        if (collinear(*pts[i], *pts[j], *pts[l]))
          throw std::invalid_argument("concyclic: three of the four points are collinear");
  return concyclic_det(chart, p, q, r, s) == 0;
}

bool general_position(const PointSet& ps) {
  const auto& pts = ps.points;
  size_t n = pts.size();
  if (n < 4) throw std::invalid_argument("general_position: need at least 4 points");

  // Lines: some n-4 points collinear (meaningful only for n-4 >= 3).
  if (n >= 7) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        size_t count = 2;
        for (size_t l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          if (collinear(pts[i], pts[j], pts[l])) ++count;
        }
        if (count >= n - 4) return false;
      }
  }

  // Circles: some n-3 points concyclic (meaningful only for n-3 >= 4).
  if (n >= 7) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        for (size_t l = j + 1; l < n; ++l) {
          if (collinear(pts[i], pts[j], pts[l])) continue;
          size_t count = 3;
          for (size_t m = 0; m < n; ++m) {
            if (m == i || m == j || m == l) continue;
            if (concyclic_det(ps.chart, pts[i], pts[j], pts[l], pts[m]) == 0) ++count;
          }
          if (count >= n - 3) return false;
        }
  }
  return true;
}

bool ptolemy_check(const Chart& chart, const QuadPoint& p, const QuadPoint& q, const QuadPoint& r,
                   const QuadPoint& s) {
  if (!concyclic(chart, p, q, r, s))
    throw std::invalid_argument("ptolemy_check: points are not concyclic");
  Rat pr2 = dist2(chart, p, r), qs2 = dist2(chart, q, s);
  Rat pq2 = dist2(chart, p, q), rs2 = dist2(chart, r, s);
  Rat ps2 = dist2(chart, p, s), qr2 = dist2(chart, q, r);
  Rat A = pr2 * qs2;  // diagonals
  Rat B = pq2 * rs2;
  Rat C = ps2 * qr2;
  Rat rest = A - B - C;
  return rest >= 0 && rest * rest == 4 * B * C;
}

Rat HyperbolaSpec::focal_dist2() const { return dist2(chart, focus1, focus2); }

Rat HyperbolaSpec::semi_axis2() const { return diff * diff / 4; }

bool HyperbolaSpec::degenerate() const {
  return diff == 0 || diff * diff >= focal_dist2();
}

bool hyperbola_membership(const HyperbolaSpec& h, const QuadPoint& p) {
  Rat d1 = dist2(h.chart, p, h.focus1);
  Rat d2 = dist2(h.chart, p, h.focus2);
  Rat rest = d1 + d2 - h.diff * h.diff;
  return rest >= 0 && rest * rest == 4 * d1 * d2;
}

ArcClass arc_class(const HyperbolaSpec& h, const QuadPoint& p) {
  if (h.degenerate()) throw std::invalid_argument("arc_class: degenerate hyperbola");
  if (!hyperbola_membership(h, p))
    throw std::invalid_argument("arc_class: point is not on the hyperbola");
  Rat d1 = dist2(h.chart, p, h.focus1);
  Rat d2 = dist2(h.chart, p, h.focus2);
  ArcClass cls;
  cls.near_focus = d1 <= d2 ? 1 : 2;  // d1 == d2 impossible for diff > 0
  Rat orient = cross(h.focus1, h.focus2, p);
  if (orient == 0) {
    cls.side = +1;
    cls.vertex = true;
  } else {
    cls.side = orient > 0 ? +1 : -1;
    cls.vertex = false;
  }
  return cls;
}

std::optional<SecantIntercept> secant_axis_intercept(const HyperbolaSpec& h, const QuadPoint& p,
                                                     const QuadPoint& q) {
  if (p == q) throw std::invalid_argument("secant_axis_intercept: coincident points");
  if (!(arc_class(h, p) == arc_class(h, q)))
    throw std::invalid_argument("secant_axis_intercept: points are on different arcs");

  // Solve p + t(q - p) on the line focus1 + span(focus2 - focus1).
  QuadPoint dir{q.x - p.x, q.y - p.y};
  QuadPoint axis{h.focus2.x - h.focus1.x, h.focus2.y - h.focus1.y};
  Rat denom = dir.x * axis.y - dir.y * axis.x;
  if (denom == 0) return std::nullopt;  // secant parallel to the focal axis
  Rat numer = (h.focus1.x - p.x) * axis.y - (h.focus1.y - p.y) * axis.x;
  Rat t = numer / denom;
  QuadPoint z{p.x + t * dir.x, p.y + t * dir.y};

  QuadPoint center{(h.focus1.x + h.focus2.x) / 2, (h.focus1.y + h.focus2.y) / 2};
  Rat coord2 = dist2(h.chart, z, center);
  // Positive direction points toward focus2 (dot product in the chart metric).
  Rat dot = (z.x - center.x) * axis.x + Rat(h.chart.k) * (z.y - center.y) * axis.y;
  Rat signed_coord2 = dot < 0 ? Rat(-coord2) : coord2;

  SecantIntercept out;
  out.point = z;
  out.signed_coord2 = signed_coord2;
  out.within_interval = coord2 <= h.semi_axis2();
  return out;
}

}  // namespace idg
