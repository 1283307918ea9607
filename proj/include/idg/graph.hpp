#pragma once

#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "idg/chart.hpp"

namespace idg {

// Finite abstract graph; vertices 0..n-1, edges unordered, no self-loops.
class DistanceGraph {
 public:
  explicit DistanceGraph(int vertex_count = 0);

  int vertex_count() const { return vertex_count_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int edge_count() const { return (int)edges_.size(); }
  int degree(int v) const;
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::set<std::pair<int, int>> edges_;  // normalized u < v
};

DistanceGraph complete_graph(int n);
DistanceGraph cycle_graph(int n);
DistanceGraph mycielskian(const DistanceGraph& g);

// Max clique found greedily, cross-checked against the degeneracy+1 upper
// bound.
int chromatic_lower_bound(const DistanceGraph& g);

// Branch and bound with clique seeding; rejects graphs above 60 vertices.
int chromatic_number_exact(const DistanceGraph& g);

enum class EdgeSemantics { integral, rational };

struct Realization {
  PointSet points;
  std::vector<int> vertex_to_point;  // indices into points.points
};

struct RealizationReport {
  std::vector<std::pair<int, int>> bad_edges;      // edges at non-matching distance
  std::vector<std::pair<int, int>> bad_non_edges;  // non-edges at matching distance
  std::vector<std::tuple<int, int, int>> collinear_triples;
  bool pass = false;
};

// Exact iff-check of the edge semantics plus the no-three-collinear rule.
RealizationReport verify_realization(const DistanceGraph& g, const Realization& real,
                                     EdgeSemantics mode);

// Core plus two extra vertices adjacent to every core vertex.
DistanceGraph build_apex_graph(const DistanceGraph& core, bool apexes_adjacent = false);

// Chain of `depth` triangles, consecutive pairs joined by all nine cross
// edges; triangle i carries pendant_counts[i] extra degree-3 vertices.
DistanceGraph build_spine_graph(int depth, const std::vector<int>& pendant_counts);

// Spine with each core graph's vertices joined to its triangle instead of
// pendant sets; core edges are kept.
DistanceGraph build_family3_graph(const std::vector<DistanceGraph>& cores);

}  // namespace idg
