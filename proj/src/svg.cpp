#include "idg/svg.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace idg {

namespace {

struct XY {
  double x, y;
};

XY embed(const Chart& chart, const QuadPoint& p) {
  double sk = std::sqrt(chart.k.get_d());
  return {p.x.get_d(), p.y.get_d() * sk};
}

void fmt(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  out << buf;
}

struct Mapper {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  double width, height, margin;
  void expand(const XY& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double scale() const {
    double sx = (width - 2 * margin) / std::max(1e-9, max_x - min_x);
    double sy = (height - 2 * margin) / std::max(1e-9, max_y - min_y);
    return std::min(sx, sy);
  }
  XY to_screen(const XY& p) const {
    double s = scale();
    return {margin + (p.x - min_x) * s, height - margin - (p.y - min_y) * s};
  }
};

void polyline(std::ostream& out, const Mapper& map, const std::vector<XY>& pts,
              const char* stroke) {
  if (pts.size() < 2) return;
  out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    XY s = map.to_screen(pts[i]);
    if (i) out << " ";
    fmt(out, s.x);
    out << ",";
    fmt(out, s.y);
  }
  out << "\"/>\n";
}

// Sampled branches of |XF1 - XF2| = d for display only.
void sample_hyperbola(std::ostream& out, const Mapper& map, const XY& f1, const XY& f2, double d) {
  double fx = f2.x - f1.x, fy = f2.y - f1.y;
  double focal = std::hypot(fx, fy);
  double a = d / 2, cf = focal / 2;
  if (!(a > 0) || a >= cf) return;
  double b = std::sqrt(cf * cf - a * a);
  double ux = fx / focal, uy = fy / focal;
  double mx = (f1.x + f2.x) / 2, my = (f1.y + f2.y) / 2;
  for (int branch : {-1, +1}) {
    std::vector<XY> pts;
    for (int i = -48; i <= 48; ++i) {
      double t = i * 0.05;
      double along = branch * a * std::cosh(t);
      double across = b * std::sinh(t);
      pts.push_back({mx + along * ux - across * uy, my + along * uy + across * ux});
    }
    polyline(out, map, pts, "#9db4d0");
  }
}

}  // namespace

void render_svg(std::ostream& out, const PointSet& ps, const SvgOptions& options) {
  Mapper map;
  map.width = options.width;
  map.height = options.height;
  map.margin = options.margin;

  std::vector<XY> pts;
  for (const QuadPoint& p : ps.points) pts.push_back(embed(ps.chart, p));
  for (const XY& p : pts) map.expand(p);

  std::vector<XY> foci;
  if (options.hyperbola_triangle) {
    PlacedTriangle placed = place_triangle(*options.hyperbola_triangle);
    foci = {embed(placed.chart, placed.a_pt), embed(placed.chart, placed.b_pt),
            embed(placed.chart, placed.c_pt)};
    for (const XY& p : foci) map.expand(p);
  }

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\">\n";

  if (foci.size() == 3) {
    const IntegralTriangle& t = *options.hyperbola_triangle;
    for (Int d = 1; d < t.c; ++d) sample_hyperbola(out, map, foci[0], foci[1], d.get_d());
    for (Int d = 1; d < t.b; ++d) sample_hyperbola(out, map, foci[0], foci[2], d.get_d());
    const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
      XY s = map.to_screen(foci[i]);
      out << "  <circle cx=\"";
      fmt(out, s.x);
      out << "\" cy=\"";
      fmt(out, s.y);
      out << "\" r=\"4\" fill=\"#c03030\"/>\n";
      out << "  <text x=\"";
      fmt(out, s.x + 6);
      out << "\" y=\"";
      fmt(out, s.y - 6);
      out << "\" font-size=\"12\">" << names[i] << "</text>\n";
    }
  }

  for (size_t i = 0; i < pts.size(); ++i) {
    XY s = map.to_screen(pts[i]);
    out << "  <circle cx=\"";
    fmt(out, s.x);
    out << "\" cy=\"";
    fmt(out, s.y);
    out << "\" r=\"3\" fill=\"#202020\"/>\n";
    out << "  <text x=\"";
    fmt(out, s.x + 5);
    out << "\" y=\"";
    fmt(out, s.y - 5);
    out << "\" font-size=\"10\">P" << i << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace idg
