#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "idg/graph.hpp"

namespace idg {

// PointSet text form: first line `chart k=<int>`, then `<x> <y>` per point in
// the rational text form. Lines starting with `#` are comments.
PointSet read_point_set(std::istream& in);
void write_point_set(std::ostream& out, const PointSet& ps);

// Graph text form: `graph <V>` then `e <u> <v>` lines, 0-indexed. An optional
// `map <p0> <p1> ...` line pairs vertex i with point index p_i.
struct GraphFile {
  DistanceGraph graph;
  std::optional<std::vector<int>> vertex_to_point;
};
GraphFile read_graph(std::istream& in);
void write_graph(std::ostream& out, const DistanceGraph& g);

PointSet read_point_set_file(const std::string& path);
GraphFile read_graph_file(const std::string& path);

}  // namespace idg
