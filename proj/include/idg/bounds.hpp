#pragma once

#include <map>
#include <string>

#include "idg/extension.hpp"

namespace idg {

// Cap 4(floor(d)+1)(2 ceil(d^2+1) - 1) + 8 ceil(d^2) (floor(d)+1) on the
// colors used by the three-round common-neighbor coloring at focal distance d.
// Monotone nondecreasing; requires d >= 1.
Int h_bound(const Rat& d);

// 4p^2, the cap on a triangle's pendant-set size at perimeter p.
Int n_bound(const Int& p);

// Perimeter-chain bound functions. f_bound is the exact optimum: the largest
// perimeter of a non-collinear, pairwise-integral triangle among the extension
// points of any integral triangle with perimeter <= p (0 when none exists).
// Cached because the chain functions below re-evaluate it heavily.
class BoundTable {
 public:
  Int f_bound(const Int& p);

  // L(j, p) = n_bound(q_j) with q_1 = p and q_{t+1} = f_bound(q_t).
  Int l_bound(int j, const Int& p);

  // n_i = L(i, i) + 1; perimeters below 3 have no triangles, so their chains
  // stay at 0 and the value is 1.
  Int spine_n(int i);

  // F*(p, 1) = p; F*(p, i+1) = f_bound(F*(p, i)).
  Int f_star_bound(const Int& p, int i);

 private:
  std::map<Int, Int> f_cache_;
};

struct ApexBoundCertificate {
  Int chromatic_lower_bound;
  // Largest T with h_bound(T) < chromatic_lower_bound; 0 when none.
  Int excluded_separation;
  std::string conclusion;
};

// Any integral realization of a core with chromatic number >= the given bound,
// joined completely to two extra vertices, must place those two vertices at
// distance greater than the excluded separation.
ApexBoundCertificate apex_lower_bound(const Int& core_chromatic_lb);

}  // namespace idg
