#pragma once

// Deterministic SVG 1.1 output for tilings and arrow fields. The y axis points
// up as in the lattice, coordinates are printed with two decimals, and the
// output depends only on the input and the options.
//
// Palette: plain dominoes are #9ecae1 (horizontal) and #fdae6b (vertical).
// With color_classes the fill also depends on the parity of x + y + order of
// the domino's lower-left cell: horizontal #1f77b4 / #2ca02c, vertical
// #d62728 / #ff7f0e (even / odd).

#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "aztec/arrowfield.hpp"
#include "aztec/bijection.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

struct RenderOptions {
  int cell_px = 24;
  bool show_arrows = false;
  bool show_nodes = false;
  bool show_bold_edges = false;
  bool color_classes = false;
};

namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

class SvgCanvas {
 public:
  SvgCanvas(const Region& frame, int cell_px)
      : px_(cell_px), min_x_(frame.min_x()), max_y_(frame.max_y()) {
    if (cell_px <= 0) throw std::invalid_argument("cell_px must be positive");
    width_ = (frame.max_x() - frame.min_x() + 2) * px_;
    height_ = (frame.max_y() - frame.min_y() + 2) * px_;
  }

  double sx(double x) const { return (x - min_x_ + 1) * px_; }
  double sy(double y) const { return (max_y_ - y + 1) * px_; }
  int px() const { return px_; }

  std::ostringstream& body() { return body_; }

  std::string finish(bool with_marker) const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_ << "\" height=\""
       << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n";
    if (with_marker)
      os << "<defs><marker id=\"arrowhead\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
            "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#000000\"/></marker></defs>\n";
    os << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width_ << "\" height=\"" << height_
       << "\" fill=\"#ffffff\"/>\n";
    os << body_.str() << "</svg>\n";
    return os.str();
  }

  void line(const char* cls, double x1, double y1, double x2, double y2, const char* extra = "") {
    body_ << "<line class=\"" << cls << "\" x1=\"" << fixed2(sx(x1)) << "\" y1=\"" << fixed2(sy(y1)) << "\" x2=\""
          << fixed2(sx(x2)) << "\" y2=\"" << fixed2(sy(y2)) << "\"" << extra << "/>\n";
  }

  void outline(const Region& r, const char* cls, const char* stroke, double width) {
    std::ostringstream d;
    for (Cell c : r.cells()) {
      if (!r.contains({c.x, c.y - 1})) seg(d, c.x, c.y, c.x + 1, c.y);
      if (!r.contains({c.x, c.y + 1})) seg(d, c.x, c.y + 1, c.x + 1, c.y + 1);
      if (!r.contains({c.x - 1, c.y})) seg(d, c.x, c.y, c.x, c.y + 1);
      if (!r.contains({c.x + 1, c.y})) seg(d, c.x + 1, c.y, c.x + 1, c.y + 1);
    }
    if (d.str().empty()) return;
    body_ << "<path class=\"" << cls << "\" d=\"" << d.str() << "\" fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"" << fixed2(width) << "\"/>\n";
  }

  void nodes(const std::set<Point>& pts) {
    body_ << "<g class=\"nodes\">\n";
    for (Point p : pts)
      body_ << "<circle class=\"node\" cx=\"" << fixed2(sx(p.x)) << "\" cy=\"" << fixed2(sy(p.y)) << "\" r=\""
            << fixed2(px_ * 0.12) << "\" fill=\"#000000\"/>\n";
    body_ << "</g>\n";
  }

  void arrows(const ArrowField& f) {
    body_ << "<g class=\"arrows\">\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Point t = f.tail_at(i);
      const Point h = f.head_at(i);
      const double dx = h.x - t.x, dy = h.y - t.y;
      line("arrow", t.x + 0.2 * dx, t.y + 0.2 * dy, h.x - 0.2 * dx, h.y - 0.2 * dy,
           " stroke=\"#000000\" stroke-width=\"1.50\" marker-end=\"url(#arrowhead)\"");
    }
    body_ << "</g>\n";
  }

  void bold(const std::set<Edge>& edges) {
    body_ << "<g class=\"bold-edges\">\n";
    for (const Edge& e : edges)
      line("bold", e.a.x, e.a.y, e.b.x, e.b.y, " stroke=\"#000000\" stroke-width=\"4.00\" stroke-linecap=\"round\"");
    body_ << "</g>\n";
  }

 private:
  void seg(std::ostringstream& d, int x1, int y1, int x2, int y2) const {
    if (!d.str().empty()) d << ' ';
    d << 'M' << fixed2(sx(x1)) << ',' << fixed2(sy(y1)) << " L" << fixed2(sx(x2)) << ',' << fixed2(sy(y2));
  }

  int px_;
  int min_x_;
  int max_y_;
  int width_ = 0;
  int height_ = 0;
  std::ostringstream body_;
};

inline const char* domino_fill(const Domino& d, int order, bool classes) {
  if (!classes) return d.horizontal() ? "#9ecae1" : "#fdae6b";
  const bool odd = ((d.cell.x + d.cell.y + order) % 2 + 2) % 2 == 1;
  if (d.horizontal()) return odd ? "#2ca02c" : "#1f77b4";
  return odd ? "#ff7f0e" : "#d62728";
}

}  // namespace detail

/// Arrows and bold edges for a tiling are those of its outward field, so they
/// are drawn only for Aztec diamonds of order >= 1.
inline std::string render_tiling(const Tiling& t, const RenderOptions& opts = {}) {
  require_valid(t);
  detail::SvgCanvas svg(t.region, opts.cell_px);
  const int order = t.region.is_aztec() ? t.region.order() : 0;
  const NodeContext ctx(t.region.is_aztec() ? std::max(order - 1, 0) : 0);
  const bool has_field = t.region.is_aztec() && order >= 1;

  svg.body() << "<g class=\"dominoes\">\n";
  for (const Domino& d : t.dominoes) {
    const double w = d.horizontal() ? 2 : 1;
    const double h = d.horizontal() ? 1 : 2;
    svg.body() << "<rect class=\"domino\" x=\"" << detail::fixed2(svg.sx(d.cell.x)) << "\" y=\""
               << detail::fixed2(svg.sy(d.cell.y + h)) << "\" width=\"" << detail::fixed2(w * svg.px())
               << "\" height=\"" << detail::fixed2(h * svg.px()) << "\" fill=\""
               << detail::domino_fill(d, order, opts.color_classes) << "\" stroke=\"#333333\" stroke-width=\"1.00\"/>\n";
  }
  svg.body() << "</g>\n";
  svg.outline(t.region, "outline", "#000000", 2.0);

  if (has_field && (opts.show_arrows || opts.show_bold_edges)) {
    const ArrowField f = field_from_outer_tiling(t, ctx);
    if (opts.show_bold_edges) svg.bold(bold_edges(f));
    if (opts.show_arrows) svg.arrows(f);
  }
  if (opts.show_nodes) {
    std::set<Point> pts;
    for (const Domino& d : t.dominoes)
      for (Cell c : d.cells()) pts.insert(detail::domino_head(d, c, ctx));
    svg.nodes(pts);
  }
  return svg.finish(has_field && opts.show_arrows);
}

inline std::string render_field(const ArrowField& f, const RenderOptions& opts = {}) {
  require_valid(f);
  detail::SvgCanvas svg(f.region(), opts.cell_px);
  svg.outline(f.region(), "outline", "#000000", 2.0);
  svg.outline(f.ctx().inner(), "inner-outline", "#888888", 1.0);
  if (opts.show_bold_edges) svg.bold(bold_edges(f));
  svg.arrows(f);
  if (opts.show_nodes) {
    std::set<Point> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
      pts.insert(f.head_at(i));
      pts.insert(f.tail_at(i));
    }
    svg.nodes(pts);
  }
  return svg.finish(true);
}

}  // namespace aztec
