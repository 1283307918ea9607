#include "idg/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace idg {

namespace {

struct RoundOneKey {
  Int diff;
  int near_focus;  // 0 when on the bisector
  int side;
  bool operator<(const RoundOneKey& o) const {
    if (diff != o.diff) return diff < o.diff;
    if (near_focus != o.near_focus) return near_focus < o.near_focus;
    return side < o.side;
  }
};

}  // namespace

ColoringCertificate common_neighbor_coloring(const Chart& chart, const QuadPoint& f1,
                                             const QuadPoint& f2,
                                             const std::vector<QuadPoint>& pts) {
  Rat focal2 = dist2(chart, f1, f2);
  if (focal2 == 0) throw std::invalid_argument("common_neighbor_coloring: coincident foci");
  Rat threshold = focal2 + 1;

  struct Info {
    Int r1, r2;
    RoundOneKey key;
    bool special;
  };
  std::vector<Info> info(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == f1 || pts[i] == f2)
      throw std::invalid_argument("common_neighbor_coloring: point coincides with a focus");
    auto r1 = integer_distance(chart, pts[i], f1);
    auto r2 = integer_distance(chart, pts[i], f2);
    if (!r1 || !r2)
      throw std::invalid_argument(
          "common_neighbor_coloring: point not at integer distance from both foci");
    Info& in = info[i];
    in.r1 = *r1;
    in.r2 = *r2;
    in.key.diff = abs(*r1 - *r2);
    if (in.key.diff == 0) {
      in.key.near_focus = 0;
    } else {
      in.key.near_focus = *r1 < *r2 ? 1 : 2;
    }
    Rat orient = (f2.x - f1.x) * (pts[i].y - f1.y) - (f2.y - f1.y) * (pts[i].x - f1.x);
    in.key.side = orient == 0 ? +1 : (orient > 0 ? +1 : -1);
    in.special = Rat(*r1) < threshold || Rat(*r2) < threshold;
  }

  // Round 2: greedy proper coloring within each round-1 class of the graph on
  // pairs at integer distance below the threshold, in arc position order.
  std::map<RoundOneKey, std::vector<size_t>> classes;
  for (size_t i = 0; i < pts.size(); ++i)
    if (!info[i].special) classes[info[i].key].push_back(i);

  std::vector<std::string> colors(pts.size());
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(),
              [&](size_t u, size_t v) { return point_less(pts[u], pts[v]); });
    std::vector<int> greedy(members.size(), -1);
    for (size_t mi = 0; mi < members.size(); ++mi) {
      std::set<int> used;
      for (size_t mj = 0; mj < mi; ++mj) {
        auto d = integer_distance(chart, pts[members[mi]], pts[members[mj]]);
        if (d && *d > 0 && Rat(*d) < threshold) used.insert(greedy[mj]);
      }
      int color = 0;
      while (used.count(color)) ++color;
      greedy[mi] = color;
      colors[members[mi]] = "D" + key.diff.get_str() + ":b" + std::to_string(key.near_focus) +
                            (key.side > 0 ? "+" : "-") + ":g" + std::to_string(color);
    }
  }

  // Round 3: unique override colors.
  size_t special_id = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    if (info[i].special) colors[i] = "special" + std::to_string(special_id++);

  // Properness: any two points at integer distance get different colors.
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j])
        throw std::invalid_argument("common_neighbor_coloring: duplicate point");
      if (colors[i] != colors[j]) continue;
      auto d = integer_distance(chart, pts[i], pts[j]);
      if (d && *d > 0)
        throw std::logic_error("common_neighbor_coloring: coloring is not proper");
    }

  std::set<std::string> distinct(colors.begin(), colors.end());

  ColoringCertificate cert;
  cert.chart = chart;
  cert.focus1 = f1;
  cert.focus2 = f2;
  cert.threshold = threshold;
  cert.points = pts;
  cert.colors = colors;
  cert.color_count = Int((unsigned long)distinct.size());
  auto focal = perfect_square_root(focal2);
  Rat d_for_cap;
  if (focal) {
    d_for_cap = *focal;
  } else {
    // Irrational focal distance: h_bound is monotone, use a ceiling.
    Int fc = ceil_int(focal2);
    Int s = integer_sqrt_floor(fc);
    if (s * s < fc) ++s;
    d_for_cap = Rat(s);
  }
  if (d_for_cap < 1) d_for_cap = 1;
  cert.color_cap = h_bound(d_for_cap);
  return cert;
}

std::vector<QuadPoint> axis_common_neighbors(const Chart& chart, const Int& c, const Int& r1_cap) {
  if (c < 1 || r1_cap < 1)
    throw std::invalid_argument("axis_common_neighbors: need c >= 1 and r1_cap >= 1");
  Rat k(chart.k);
  std::vector<QuadPoint> out;
  for (Int r1 = 1; r1 <= r1_cap; ++r1) {
    Int r2_lo = r1 > c ? Int(r1 - c) : Int(1);
    for (Int r2 = r2_lo; r2 <= r1 + c; ++r2) {
      Rat x = make_rat(r1 * r1 - r2 * r2 + c * c, 2 * c);
      Rat y2 = (Rat(r1 * r1) - x * x) / k;
      if (y2 <= 0) continue;  // skip the focal axis
      auto y = perfect_square_root(y2);
      if (!y) continue;
      out.push_back(QuadPoint{x, *y});
      out.push_back(QuadPoint{x, -*y});
    }
  }
  return out;
}

}  // namespace idg
