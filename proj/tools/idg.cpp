#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idg/bounds.hpp"
#include "idg/circle_sets.hpp"
#include "idg/coloring.hpp"
#include "idg/extension.hpp"
#include "idg/io.hpp"
#include "idg/svg.hpp"

namespace {

using namespace idg;

// Exit codes: 0 success/pass, 1 negative verdict, 2 invalid input.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
    }
    return file;
  }
};

PositionMode parse_mode(const std::string& mode) {
  if (mode == "no3line") return PositionMode::no3line;
  if (mode == "no3line+no4circle") return PositionMode::no3line_no4circle;
  throw std::invalid_argument("unknown mode: " + mode);
}

IntegralTriangle triangle_from(const std::vector<long>& sides) {
  if (sides.size() != 3) throw std::invalid_argument("--triangle needs three sides");
  return IntegralTriangle(Int(sides[0]), Int(sides[1]), Int(sides[2]));
}

int cmd_enumerate(Output& out, long pmax) {
  for (const IntegralTriangle& t : enumerate_integral_triangles(Int(pmax)))
    out.stream() << t.a.get_str() << " " << t.b.get_str() << " " << t.c.get_str() << " "
                 << t.characteristic().get_str() << "\n";
  return kExitPass;
}

int cmd_extend(Output& out, const std::vector<long>& sides) {
  IntegralTriangle t = triangle_from(sides);
  auto sols = extension_candidates(t);
  PointSet ps{place_triangle(t).chart, {}};
  for (const auto& s : sols) ps.points.push_back(s.point);
  write_point_set(out.stream(), ps);
  for (const auto& s : sols)
    out.stream() << "# " << to_string(s.point.x) << " " << to_string(s.point.y) << " r=("
                 << s.r1.get_str() << "," << s.r2.get_str() << "," << s.r3.get_str() << ")"
                 << (s.collinear_with.empty() ? "" : " collinear-with-base-pair") << "\n";
  std::cout << "count=" << sols.size() << " bound=" << count_bound(t).get_str() << "\n";
  return kExitPass;
}

int cmd_grow(Output& out, const std::string& base_path, int target, long cap,
             const std::string& mode) {
  PointSet base = read_point_set_file(base_path);
  auto grown = grow_cliques(base, target, Int(cap), parse_mode(mode));
  for (const PointSet& ps : grown) {
    write_point_set(out.stream(), ps);
    out.stream() << "\n";
  }
  std::cout << "count=" << grown.size() << "\n";
  return kExitPass;
}

int cmd_search(Output& out, int n, long cap, const std::string& mode, int jobs) {
  auto result = min_diameter_search(n, Int(cap), parse_mode(mode), jobs);
  if (!result) {
    std::cout << "none\n";
    return kExitPass;
  }
  std::cout << "diameter=" << result->diameter.get_str() << "\n";
  write_point_set(out.stream(), result->witness);
  return kExitPass;
}

int cmd_bounds_table(Output& out, long pmax, int imax, long dmax) {
  BoundTable table;
  auto& os = out.stream();
  os << "F (largest follow-on triangle perimeter):\n";
  for (long p = 3; p <= pmax; ++p)
    os << "  F(" << p << ") = " << table.f_bound(Int(p)).get_str() << "\n";
  os << "H (color cap at focal distance d):\n";
  for (long d = 1; d <= dmax; ++d)
    os << "  H(" << d << ") = " << h_bound(Rat(d)).get_str() << "\n";
  os << "L (pendant-set cap, chain from perimeter p):\n";
  for (int j = 1; j <= imax; ++j) {
    os << " ";
    for (long p = 3; p <= pmax; ++p)
      os << "  L(" << j << "," << p << ") = " << table.l_bound(j, Int(p)).get_str();
    os << "\n";
  }
  os << "F* (perimeter chain):\n";
  for (int i = 1; i <= imax; ++i) {
    os << " ";
    for (long p = 3; p <= pmax; ++p)
      os << "  F*(" << p << "," << i << ") = " << table.f_star_bound(Int(p), i).get_str();
    os << "\n";
  }
  os << "spine n_i = L(i,i)+1:\n";
  for (int i = 1; i <= imax; ++i)
    os << "  n_" << i << " = " << table.spine_n(i).get_str() << "\n";
  return kExitPass;
}

int cmd_color_cert(Output& out, long focal, long chart_k, int count, long rcap) {
  Chart chart{Int(chart_k)};
  auto pts = axis_common_neighbors(chart, Int(focal), Int(rcap));
  std::sort(pts.begin(), pts.end(), point_less);
  if ((int)pts.size() > count) pts.resize(count);
  QuadPoint f1{Rat(0), Rat(0)}, f2{Rat(focal), Rat(0)};
  auto cert = common_neighbor_coloring(chart, f1, f2, pts);
  for (size_t i = 0; i < cert.points.size(); ++i)
    out.stream() << to_string(cert.points[i].x) << " " << to_string(cert.points[i].y) << " -> "
                 << cert.colors[i] << "\n";
  std::cout << "colors=" << cert.color_count.get_str() << " bound=" << cert.color_cap.get_str()
            << "\n";
  return cert.color_count <= cert.color_cap ? kExitPass : kExitFail;
}

int cmd_rational_circle(Output& out, int n) {
  write_point_set(out.stream(), rational_circle_points(n));
  return kExitPass;
}

int cmd_scale(Output& out, const std::string& in_path) {
  ScaledPointSet scaled = scale_to_integral(read_point_set_file(in_path));
  out.stream() << "# scale factor=" << scaled.factor.get_str() << "\n";
  write_point_set(out.stream(), scaled.points);
  return kExitPass;
}

int cmd_verify(Output& out, const std::string& mode, const std::string& graph_path,
               const std::string& pts_path) {
  GraphFile gf = read_graph_file(graph_path);
  PointSet ps = read_point_set_file(pts_path);
  Realization real;
  real.points = ps;
  if (gf.vertex_to_point) {
    real.vertex_to_point = *gf.vertex_to_point;
  } else {
    real.vertex_to_point.resize(gf.graph.vertex_count());
    for (int i = 0; i < gf.graph.vertex_count(); ++i) real.vertex_to_point[i] = i;
  }
  EdgeSemantics sem;
  if (mode == "integral")
    sem = EdgeSemantics::integral;
  else if (mode == "rational")
    sem = EdgeSemantics::rational;
  else
    throw std::invalid_argument("verify: mode must be integral or rational");

  RealizationReport report = verify_realization(gf.graph, real, sem);
  auto& os = out.stream();
  for (const auto& [u, v] : report.bad_edges)
    os << "edge " << u << " " << v << " has non-matching distance\n";
  for (const auto& [u, v] : report.bad_non_edges)
    os << "non-edge " << u << " " << v << " has matching distance\n";
  for (const auto& [u, v, w] : report.collinear_triples)
    os << "collinear " << u << " " << v << " " << w << "\n";
  os << "verdict=" << (report.pass ? "pass" : "fail") << "\n";
  return report.pass ? kExitPass : kExitFail;
}

int cmd_nonrational_cert(Output& out, int n_core) {
  NonRationalityTranscript tr = nonrationality_transcript(n_core);
  auto& os = out.stream();
  os << "graph vertices=" << tr.graph.vertex_count() << " edges=" << tr.graph.edge_count()
     << "\n";
  bool all_ok = true;
  for (size_t i = 0; i < tr.steps.size(); ++i) {
    os << (i + 1) << ". " << tr.steps[i].text << " CHECK: " << (tr.steps[i].checked ? "ok" : "FAIL")
       << "\n";
    all_ok = all_ok && tr.steps[i].checked;
  }
  return all_ok ? kExitPass : kExitFail;
}

int cmd_render_svg(Output& out, const std::string& in_path, const std::vector<long>& sides) {
  PointSet ps = in_path.empty() ? PointSet{Chart{1}, {}} : read_point_set_file(in_path);
  SvgOptions options;
  if (!sides.empty()) options.hyperbola_triangle = triangle_from(sides);
  render_svg(out.stream(), ps, options);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for integral and rational distance sets in the plane"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--out", out.path, "write output to a file instead of stdout");

  long pmax = 9;
  auto* enumerate = app.add_subcommand("enumerate-triangles", "list integral triangles");
  enumerate->add_option("--pmax", pmax, "maximum perimeter")->required();

  std::vector<long> sides;
  auto* extend = app.add_subcommand("extend", "points at integer distance from a triangle");
  extend->add_option("--triangle", sides, "sides a b c")->expected(3)->required();

  std::string base_path, mode = "no3line";
  int target = 4;
  long cap = 5;
  auto* grow = app.add_subcommand("grow", "extend an integral point set to larger cliques");
  grow->add_option("--base", base_path, "base point set file")->required();
  grow->add_option("--target", target, "target size")->required();
  grow->add_option("--cap", cap, "diameter cap")->required();
  grow->add_option("--mode", mode, "no3line or no3line+no4circle");

  int search_n = 4, jobs = 1;
  auto* search = app.add_subcommand("search-min-diameter", "minimal diameter of an n-point set");
  search->add_option("--n", search_n, "number of points")->required();
  search->add_option("--cap", cap, "diameter cap")->required();
  search->add_option("--mode", mode, "no3line or no3line+no4circle");
  search->add_option("--jobs", jobs, "worker threads");

  long table_pmax = 8, table_dmax = 5;
  int table_imax = 3;
  auto* bounds = app.add_subcommand("bounds-table", "tables of the bound functions");
  bounds->add_option("--pmax", table_pmax, "largest perimeter for F/L/F*");
  bounds->add_option("--imax", table_imax, "largest chain index");
  bounds->add_option("--dmax", table_dmax, "largest focal distance for H");

  long focal = 5, chart_k = 1, rcap = 2000;
  int color_count = 60;
  auto* color = app.add_subcommand("color-cert", "common-neighbor coloring certificate");
  color->add_option("--focal", focal, "integer focal distance")->required();
  color->add_option("--k", chart_k, "chart radicand");
  color->add_option("--count", color_count, "number of generated points");
  color->add_option("--rcap", rcap, "radius sweep cap for generation");

  int circle_n = 12;
  auto* circle = app.add_subcommand("rational-circle", "rational-chord points on the unit circle");
  circle->add_option("--n", circle_n, "number of points")->required();

  std::string scale_in;
  auto* scale = app.add_subcommand("scale", "scale a rational-chord point set to integral");
  scale->add_option("--in", scale_in, "input point set file")->required();

  std::string verify_mode = "integral", graph_path, pts_path;
  auto* verify = app.add_subcommand("verify", "verify a realization against a graph");
  verify->add_option("--mode", verify_mode, "integral or rational")->required();
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("points", pts_path, "point set file")->required();

  int n_core = 9;
  auto* cert = app.add_subcommand("nonrational-cert", "conditional non-rationality transcript");
  cert->add_option("--N", n_core, "core clique size")->required();

  std::string svg_in;
  std::vector<long> svg_sides;
  auto* svg = app.add_subcommand("render-svg", "render a point set or hyperbola family");
  svg->add_option("--in", svg_in, "input point set file");
  svg->add_option("--triangle", svg_sides, "draw the hyperbola families of this triangle")
      ->expected(3);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(out, pmax);
    if (extend->parsed()) return cmd_extend(out, sides);
    if (grow->parsed()) return cmd_grow(out, base_path, target, cap, mode);
    if (search->parsed()) return cmd_search(out, search_n, cap, mode, jobs);
    if (bounds->parsed()) return cmd_bounds_table(out, table_pmax, table_imax, table_dmax);
    if (color->parsed()) return cmd_color_cert(out, focal, chart_k, color_count, rcap);
    if (circle->parsed()) return cmd_rational_circle(out, circle_n);
    if (scale->parsed()) return cmd_scale(out, scale_in);
    if (verify->parsed()) return cmd_verify(out, verify_mode, graph_path, pts_path);
    if (cert->parsed()) return cmd_nonrational_cert(out, n_core);
    if (svg->parsed()) return cmd_render_svg(out, svg_in, svg_sides);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
