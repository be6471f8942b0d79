#include "latfree/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "latfree/lattice_search.hpp"

namespace latfree {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

/// Exact counterclockwise order of directions around the origin: upper
/// half-plane (including the positive x axis) first, ties broken by the cross
/// product.
bool ccw_less(const std::pair<Rational, Rational>& u,
              const std::pair<Rational, Rational>& v) {
  auto half = [](const std::pair<Rational, Rational>& w) {
    return (sgn(w.second) > 0 || (sgn(w.second) == 0 && sgn(w.first) > 0)) ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  Rational cross = u.first * v.second - u.second * v.first;
  return sgn(cross) > 0;
}

}  // namespace

std::string plot2d(const Polyhedron<Rational>& p, const PlotWindow& w) {
  if (p.ambient_dim() != 2)
    throw std::invalid_argument("plotting needs a two-dimensional polyhedron");
  if (w.x1 <= w.x0 || w.y1 <= w.y0)
    throw std::invalid_argument("the window must have positive extent");
  if (w.scale < 1) throw std::invalid_argument("the pixel scale must be positive");

  auto X = [&](const Rational& x) { return approx(x - w.x0) * w.scale; };
  auto Y = [&](const Rational& y) { return approx(w.y1 - y) * w.scale; };
  double width = approx(w.x1 - w.x0) * w.scale;
  double height = approx(w.y1 - w.y0) * w.scale;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << " "
      << px(height) << "\">\n";
  svg << "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" fill=\"white\"/>\n";

  bool feasible = !is_empty(p);

  // Shaded region: vertices of the window clip in exact counterclockwise
  // order around their centroid.
  if (feasible) {
    Polyhedron<Rational> clipped = clip_to_box(p, {w.x0, w.y0}, {w.x1, w.y1});
    if (!is_empty(clipped)) {
      std::vector<Vec<Rational>> verts = vertices(clipped);
      if (!verts.empty()) {
        Rational cx(0), cy(0);
        for (const Vec<Rational>& v : verts) {
          cx += v[0];
          cy += v[1];
        }
        Rational n((Int(verts.size())));
        cx /= n;
        cy /= n;
        std::vector<std::pair<Rational, Rational>> dirs;
        std::vector<std::size_t> order(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
          dirs.emplace_back(verts[i][0] - cx, verts[i][1] - cy);
          order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return ccw_less(dirs[a], dirs[b]);
        });
        svg << "  <polygon class=\"region\" points=\"";
        for (std::size_t i = 0; i < order.size(); ++i) {
          const Vec<Rational>& v = verts[order[i]];
          if (i) svg << " ";
          svg << px(X(v[0])) << "," << px(Y(v[1]));
        }
        svg << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\" "
               "stroke-width=\"1.5\"/>\n";
      }
    }
  }

  // Lattice points of the window, lexicographic order; points of the
  // polyhedron get classified marks on top of the plain dots.
  std::optional<Polyhedron<Rational>> canon;
  if (feasible) canon = canonicalize(p);
  Int zx0 = ceil_int(w.x0), zx1 = floor_int(w.x1);
  Int zy0 = ceil_int(w.y0), zy1 = floor_int(w.y1);
  std::ostringstream marks;
  for (Int zx = zx0; zx <= zx1; ++zx) {
    for (Int zy = zy0; zy <= zy1; ++zy) {
      Rational rx((zx)), ry((zy));
      svg << "  <circle class=\"lattice\" cx=\"" << px(X(rx)) << "\" cy=\""
          << px(Y(ry)) << "\" r=\"2\" fill=\"#777777\"/>\n";
      if (!canon || !canon->contains({rx, ry})) continue;
      Witness c = classify_point(*canon, {zx, zy});
      if (c.location == Witness::Location::interior) {
        marks << "  <circle class=\"interior\" cx=\"" << px(X(rx)) << "\" cy=\""
              << px(Y(ry)) << "\" r=\"5\" fill=\"#de2d26\"/>\n";
      } else if (c.location == Witness::Location::facet_relint) {
        marks << "  <circle class=\"witness\" cx=\"" << px(X(rx)) << "\" cy=\""
              << px(Y(ry)) << "\" r=\"4\" fill=\"#31a354\"/>\n";
      } else {
        marks << "  <circle class=\"boundary\" cx=\"" << px(X(rx)) << "\" cy=\""
              << px(Y(ry)) << "\" r=\"3\" fill=\"#fd8d3c\"/>\n";
      }
    }
  }
  svg << marks.str();
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace latfree
