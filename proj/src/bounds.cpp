#include "idg/bounds.hpp"

#include <stdexcept>

namespace idg {

Int h_bound(const Rat& d) {
  if (d < 1) throw std::invalid_argument("h_bound: d must be >= 1");
  Int m = floor_int(d);
  Rat dp = d * d + 1;
  Int arcs = 4 * (m + 1);
  Int greedy = 2 * ceil_int(dp) - 1;
  Int specials = 8 * ceil_int(dp - 1) * (m + 1);
  return arcs * greedy + specials;
}

Int n_bound(const Int& p) {
  if (p < 0) throw std::invalid_argument("n_bound: negative perimeter");
  return 4 * p * p;
}

Int BoundTable::f_bound(const Int& p) {
  if (p < 3) return 0;
  auto it = f_cache_.find(p);
  if (it != f_cache_.end()) return it->second;

  Int best = 0;
  for (const IntegralTriangle& t : enumerate_integral_triangles(p)) {
    PlacedTriangle placed = place_triangle(t);
    auto ext = extension_candidates(t);
    size_t n = ext.size();
    if (n < 3) continue;
    // Pairwise integer distances among the extension points.
    std::vector<std::vector<std::optional<Int>>> dist(n, std::vector<std::optional<Int>>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        dist[i][j] = integer_distance(placed.chart, ext[i].point, ext[j].point);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        if (!dist[i][j]) continue;
        for (size_t l = j + 1; l < n; ++l) {
          if (!dist[i][l] || !dist[j][l]) continue;
          if (collinear(ext[i].point, ext[j].point, ext[l].point)) continue;
          Int per = *dist[i][j] + *dist[i][l] + *dist[j][l];
          if (per > best) best = per;
        }
      }
  }
  f_cache_.emplace(p, best);
  return best;
}

Int BoundTable::l_bound(int j, const Int& p) {
  if (j < 1) throw std::invalid_argument("l_bound: j must be >= 1");
  Int q = p < 3 ? Int(0) : p;
  for (int t = 1; t < j && q != 0; ++t) q = f_bound(q);
  return n_bound(q);
}

Int BoundTable::spine_n(int i) {
  if (i < 1) throw std::invalid_argument("spine_n: i must be >= 1");
  return l_bound(i, Int(i)) + 1;
}

Int BoundTable::f_star_bound(const Int& p, int i) {
  if (p < 3 || i < 1) throw std::invalid_argument("f_star_bound: need p >= 3 and i >= 1");
  Int q = p;
  for (int t = 1; t < i; ++t) q = f_bound(q);
  return q;
}

ApexBoundCertificate apex_lower_bound(const Int& core_chromatic_lb) {
  if (core_chromatic_lb < 1)
    throw std::invalid_argument("apex_lower_bound: bound must be >= 1");
  Int t = 0;
  while (h_bound(Rat(t + 1)) < core_chromatic_lb) ++t;
  ApexBoundCertificate cert;
  cert.chromatic_lower_bound = core_chromatic_lb;
  cert.excluded_separation = t;
  cert.conclusion = "any integral realization places the two apex vertices at distance > " +
                    t.get_str();
  return cert;
}

}  // namespace idg
