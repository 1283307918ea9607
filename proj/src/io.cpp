#include "idg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace idg {

namespace {

// Next content line, with comments and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::invalid_argument("point set: missing chart header");
  std::istringstream header(line);
  std::string word, kspec;
  header >> word >> kspec;
  if (word != "chart" || kspec.rfind("k=", 0) != 0)
    throw std::invalid_argument("point set: expected `chart k=<int>`, got `" + line + "`");
  PointSet ps;
  ps.chart.k = Int(kspec.substr(2));
  if (ps.chart.k < 1) throw std::invalid_argument("point set: chart k must be >= 1");

  while (next_line(in, line)) {
    std::istringstream row(line);
    std::string xs, ys, extra;
    row >> xs >> ys;
    if (ys.empty() || (row >> extra))
      throw std::invalid_argument("point set: expected `<x> <y>`, got `" + line + "`");
    ps.points.push_back(QuadPoint{parse_rational(xs), parse_rational(ys)});
  }
  return ps;
}

void write_point_set(std::ostream& out, const PointSet& ps) {
  out << "chart k=" << ps.chart.k.get_str() << "\n";
  for (const QuadPoint& p : ps.points) out << to_string(p.x) << " " << to_string(p.y) << "\n";
}

GraphFile read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::invalid_argument("graph: missing header");
  std::istringstream header(line);
  std::string word;
  int vertices = -1;
  header >> word >> vertices;
  if (word != "graph" || vertices < 0)
    throw std::invalid_argument("graph: expected `graph <V>`, got `" + line + "`");
  GraphFile gf{DistanceGraph(vertices), std::nullopt};

  while (next_line(in, line)) {
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "e") {
      int u = -1, v = -1;
      row >> u >> v;
      gf.graph.add_edge(u, v);
    } else if (tag == "map") {
      std::vector<int> map;
      int idx;
      while (row >> idx) map.push_back(idx);
      if ((int)map.size() != vertices)
        throw std::invalid_argument("graph: map line must list one point index per vertex");
      gf.vertex_to_point = std::move(map);
    } else {
      throw std::invalid_argument("graph: unknown line `" + line + "`");
    }
  }
  return gf;
}

void write_graph(std::ostream& out, const DistanceGraph& g) {
  out << "graph " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point set file: " + path);
  return read_point_set(in);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

}  // namespace idg
