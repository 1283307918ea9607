#include "idg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace idg {

DistanceGraph::DistanceGraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("DistanceGraph: negative vertex count");
}

void DistanceGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (u > v) std::swap(u, v);
  edges_.emplace(u, v);
}

bool DistanceGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) > 0;
}

int DistanceGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_)
    if (a == v || b == v) ++d;
  return d;
}

DistanceGraph complete_graph(int n) {
  DistanceGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

DistanceGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  DistanceGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

DistanceGraph mycielskian(const DistanceGraph& g) {
  int n = g.vertex_count();
  DistanceGraph m(2 * n + 1);
  for (const auto& [u, v] : g.edges()) {
    m.add_edge(u, v);
    m.add_edge(u, n + v);
    m.add_edge(v, n + u);
  }
  for (int i = 0; i < n; ++i) m.add_edge(n + i, 2 * n);
  return m;
}

namespace {

std::vector<std::vector<bool>> adjacency(const DistanceGraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

// Greedy clique around each start vertex, highest degree first.
int greedy_clique(const DistanceGraph& g) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return g.degree(u) > g.degree(v); });
  int best = n > 0 ? 1 : 0;
  for (int start : order) {
    std::vector<int> clique{start};
    for (int v : order) {
      if (v == start) continue;
      bool ok = true;
      for (int c : clique)
        if (!adj[v][c]) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, (int)clique.size());
  }
  return best;
}

int degeneracy(const DistanceGraph& g) {
  int n = g.vertex_count();
  auto adj = adjacency(g);
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
  int degen = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && (v == -1 || deg[i] < deg[v])) v = i;
    degen = std::max(degen, deg[v]);
    removed[v] = true;
    for (int i = 0; i < n; ++i)
      if (!removed[i] && adj[v][i]) --deg[i];
  }
  return degen;
}

bool k_colorable(const std::vector<std::vector<bool>>& adj, const std::vector<int>& order,
                 std::vector<int>& color, size_t pos, int k, int used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  if (color[v] >= 0) return k_colorable(adj, order, color, pos + 1, k, used);
  int limit = std::min(k, used + 1);  // new colors only in first-use order
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (size_t i = 0; i < adj.size(); ++i)
      if (adj[v][i] && color[i] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (k_colorable(adj, order, color, pos + 1, k, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_lower_bound(const DistanceGraph& g) {
  if (g.vertex_count() == 0) return 0;
  int clique = greedy_clique(g);
  int upper = degeneracy(g) + 1;
  if (clique > upper) throw std::logic_error("chromatic_lower_bound: clique exceeds degeneracy+1");
  return clique;
}

int chromatic_number_exact(const DistanceGraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 60)
    throw std::invalid_argument(
        "chromatic_number_exact: graph above the 60-vertex budget; use chromatic_lower_bound");
  auto adj = adjacency(g);

  // Seed: greedily rebuilt clique, pre-colored with distinct colors.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return g.degree(u) > g.degree(v); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int c : clique)
      if (!adj[v][c]) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }

  for (int k = std::max<int>(1, clique.size());; ++k) {
    std::vector<int> color(n, -1);
    for (size_t i = 0; i < clique.size() && (int)i < k; ++i) color[clique[i]] = (int)i;
    if (k_colorable(adj, order, color, 0, k, std::min<int>(k, clique.size()))) return k;
  }
}

RealizationReport verify_realization(const DistanceGraph& g, const Realization& real,
                                     EdgeSemantics mode) {
  int n = g.vertex_count();
  if ((int)real.vertex_to_point.size() != n)
    throw std::invalid_argument("verify_realization: vertex map size mismatch");
  auto point_of = [&](int v) -> const QuadPoint& {
    int idx = real.vertex_to_point[v];
    if (idx < 0 || idx >= (int)real.points.points.size())
      throw std::invalid_argument("verify_realization: vertex map index out of range");
    return real.points.points[idx];
  };
  const Chart& chart = real.points.chart;

  RealizationReport report;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool matches = mode == EdgeSemantics::integral
                         ? integer_distance(chart, point_of(u), point_of(v)).has_value()
                         : rational_distance(chart, point_of(u), point_of(v)).has_value();
      if (g.has_edge(u, v) && !matches) report.bad_edges.emplace_back(u, v);
      if (!g.has_edge(u, v) && matches) report.bad_non_edges.emplace_back(u, v);
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (collinear(point_of(u), point_of(v), point_of(w)))
          report.collinear_triples.emplace_back(u, v, w);
  report.pass = report.bad_edges.empty() && report.bad_non_edges.empty() &&
                report.collinear_triples.empty();
  return report;
}

DistanceGraph build_apex_graph(const DistanceGraph& core, bool apexes_adjacent) {
  int n = core.vertex_count();
  DistanceGraph g(n + 2);
  for (const auto& [u, v] : core.edges()) g.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, n);
    g.add_edge(i, n + 1);
  }
  if (apexes_adjacent) g.add_edge(n, n + 1);
  return g;
}

DistanceGraph build_spine_graph(int depth, const std::vector<int>& pendant_counts) {
  if (depth < 1) throw std::invalid_argument("build_spine_graph: depth must be >= 1");
  if ((int)pendant_counts.size() != depth)
    throw std::invalid_argument("build_spine_graph: pendant count per triangle required");
  for (int c : pendant_counts)
    if (c < 0) throw std::invalid_argument("build_spine_graph: negative pendant count");

  int total = 3 * depth;
  for (int c : pendant_counts) total += c;
  DistanceGraph g(total);
  auto tri = [](int i, int v) { return 3 * i + v; };
  for (int i = 0; i < depth; ++i)
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) g.add_edge(tri(i, u), tri(i, v));
  for (int i = 0; i + 1 < depth; ++i)
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) g.add_edge(tri(i, u), tri(i + 1, v));
  int next = 3 * depth;
  for (int i = 0; i < depth; ++i)
    for (int p = 0; p < pendant_counts[i]; ++p, ++next)
      for (int u = 0; u < 3; ++u) g.add_edge(next, tri(i, u));
  return g;
}

DistanceGraph build_family3_graph(const std::vector<DistanceGraph>& cores) {
  int depth = (int)cores.size();
  if (depth < 1) throw std::invalid_argument("build_family3_graph: need at least one core");
  int total = 3 * depth;
  for (const auto& core : cores) total += core.vertex_count();
  DistanceGraph g(total);
  auto tri = [](int i, int v) { return 3 * i + v; };
  for (int i = 0; i < depth; ++i)
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) g.add_edge(tri(i, u), tri(i, v));
  for (int i = 0; i + 1 < depth; ++i)
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) g.add_edge(tri(i, u), tri(i + 1, v));
  int base = 3 * depth;
  for (int i = 0; i < depth; ++i) {
    const DistanceGraph& core = cores[i];
    for (const auto& [u, v] : core.edges()) g.add_edge(base + u, base + v);
    for (int v = 0; v < core.vertex_count(); ++v)
      for (int u = 0; u < 3; ++u) g.add_edge(base + v, tri(i, u));
    base += core.vertex_count();
  }
  return g;
}

}  // namespace idg
