#include "calisson/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "calisson/height.hpp"

namespace calisson {

namespace {

// Edges that separate tiles (or cells, when there is no tiling).
std::vector<char> drawn_edges(const Region& region, const Tiling* tiling) {
  std::vector<char> drawn(region.edges().size(), 0);
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    const Edge& e = region.edges()[i];
    if (!e.interior()) {
      drawn[i] = 1;
    } else {
      drawn[i] = tiling == nullptr || tiling->mate[e.left] != e.right;
    }
  }
  return drawn;
}

struct Bounds {
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
};

Bounds vertex_bounds(const Region& region) {
  Bounds b;
  for (const Point& p : region.vertices()) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

class Canvas {
 public:
  Canvas(int rows, int cols) : cols_(cols), cells_(std::size_t(rows) * cols, " ") {}
  void put(int r, int c, const char* glyph) { cells_[std::size_t(r) * cols_ + c] = glyph; }
  const std::string& get(int r, int c) const { return cells_[std::size_t(r) * cols_ + c]; }
  std::string str() const {
    std::string out;
    for (std::size_t r = 0; r * cols_ < cells_.size(); ++r) {
      std::string line;
      for (int c = 0; c < cols_; ++c) line += cells_[r * cols_ + c];
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    }
    return out;
  }

 private:
  int cols_;
  std::vector<std::string> cells_;
};

// Junction glyph from the arms present: bit 0 east, 1 north, 2 west, 3 south.
const char* junction(int arms) {
  static const char* const glyphs[16] = {" ", "╶", "╵", "└", "╴", "─", "┘", "┴",
                                         "╷", "┌", "│", "├", "┐", "┬", "┤", "┼"};
  return glyphs[arms];
}

std::string ascii_square(const Region& region, const Tiling* tiling, const RenderStyle& style) {
  const Bounds b = vertex_bounds(region);
  const int rows = 2 * (b.y1 - b.y0) + 1;
  const int cols = 4 * (b.x1 - b.x0) + 1;
  Canvas canvas(rows, cols);
  auto row_of = [&](int y) { return 2 * (b.y1 - y); };
  auto col_of = [&](int x) { return 4 * (x - b.x0); };

  if (style.show_colors) {
    for (int i = 0; i < region.cell_count(); ++i) {
      if (region.color(i) != Color::Black) continue;
      const Cell& c = region.cells()[i];
      for (int k = 1; k <= 3; ++k) canvas.put(row_of(c.y) - 1, col_of(c.x) + k, "░");
    }
  }
  const auto drawn = drawn_edges(region, tiling);
  std::vector<int> arms(region.vertex_count(), 0);
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    if (!drawn[i]) continue;
    const Edge& e = region.edges()[i];
    const Point p = region.vertices()[e.from];
    if (region.vertices()[e.to].y == p.y) {
      arms[e.from] |= 1;
      arms[e.to] |= 4;
      for (int k = 1; k <= 3; ++k) canvas.put(row_of(p.y), col_of(p.x) + k, "─");
    } else {
      arms[e.from] |= 2;
      arms[e.to] |= 8;
      canvas.put(row_of(p.y) - 1, col_of(p.x), "│");
    }
  }
  for (int v = 0; v < region.vertex_count(); ++v) {
    const Point p = region.vertices()[v];
    canvas.put(row_of(p.y), col_of(p.x), junction(arms[v]));
  }
  return canvas.str();
}

std::string ascii_triangle(const Region& region, const Tiling* tiling) {
  // Lattice point (x, y) sits at the bottom-left corner of character column
  // 4x + 2y in text row 2(ymax - y) + 1.
  const Bounds b = vertex_bounds(region);
  int c0 = std::numeric_limits<int>::max();
  int c1 = std::numeric_limits<int>::min();
  for (const Point& p : region.vertices()) {
    c0 = std::min(c0, 4 * p.x + 2 * p.y);
    c1 = std::max(c1, 4 * p.x + 2 * p.y);
  }
  const int rows = 2 * (b.y1 - b.y0) + 2;
  const int cols = c1 - c0 + 4;
  Canvas canvas(rows, cols);
  const auto drawn = drawn_edges(region, tiling);
  std::vector<std::pair<int, int>> horizontal;
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    if (!drawn[i]) continue;
    const Edge& e = region.edges()[i];
    const Point p = region.vertices()[e.from];
    const Point q = region.vertices()[e.to];
    const int r = 2 * (b.y1 - p.y) + 1;
    const int c = 4 * p.x + 2 * p.y - c0 + 2;
    if (q.y == p.y) {
      horizontal.emplace_back(r, c);
    } else if (q.x == p.x) {
      canvas.put(r, c, "/");
      canvas.put(r - 1, c + 1, "/");
    } else {
      canvas.put(r, c - 1, "\\");
      canvas.put(r - 1, c - 2, "\\");
    }
  }
  // Underscores last, so slashes sharing a character win.
  for (auto [r, c] : horizontal) {
    for (int k = 0; k < 4; ++k) {
      if (canvas.get(r, c + k) == " ") canvas.put(r, c + k, "_");
    }
  }
  std::string out = canvas.str();
  // Drop the blank first line the top vertices leave behind.
  while (out.size() > 1 && out.front() == '\n') out.erase(out.begin());
  return out;
}

std::string height_table(const HeightFunction& h) {
  const Region& region = h.region;
  const Bounds b = vertex_bounds(region);
  std::string out = "heights (rows from the top, columns by x):\n";
  char buf[16];
  for (int y = b.y1; y >= b.y0; --y) {
    std::string line;
    for (int x = b.x0; x <= b.x1; ++x) {
      const int v = region.find_vertex(Point{x, y});
      if (v < 0) {
        line += "    ";
      } else {
        std::snprintf(buf, sizeof buf, "%4d", h.values[v]);
        line += buf;
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

// Polygon through the given lattice points, ordered by angle around their mean.
std::vector<std::array<double, 2>> convex_outline(Lattice lattice, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::array<double, 2>> out;
  double cx = 0, cy = 0;
  for (const Point& p : pts) {
    out.push_back(embed(lattice, p));
    cx += out.back()[0];
    cy += out.back()[1];
  }
  cx /= double(out.size());
  cy /= double(out.size());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  return out;
}

std::string svg(const Region& region, const Tiling* tiling, const RenderStyle& style,
                const HeightFunction* heights) {
  const Lattice lat = region.lattice();
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  for (const Point& p : region.vertices()) {
    const auto q = embed(lat, p);
    x0 = std::min(x0, q[0]);
    y0 = std::min(y0, q[1]);
    x1 = std::max(x1, q[0]);
    y1 = std::max(y1, q[1]);
  }
  const double s = style.scale;
  const double margin = s;
  auto px = [&](double x) { return fmt((x - x0) * s + margin); };
  auto py = [&](double y) { return fmt((y1 - y) * s + margin); };
  auto points = [&](const std::vector<std::array<double, 2>>& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i > 0) out += ' ';
      out += px(poly[i][0]) + "," + py(poly[i][1]);
    }
    return out;
  };
  auto cell_points = [&](int i) {
    std::vector<Point> pts;
    for (int v : region.corners(i)) pts.push_back(region.vertices()[v]);
    return pts;
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt((x1 - x0) * s + 2 * margin) +
         "\" height=\"" + fmt((y1 - y0) * s + 2 * margin) + "\" viewBox=\"0 0 " +
         fmt((x1 - x0) * s + 2 * margin) + " " + fmt((y1 - y0) * s + 2 * margin) + "\">\n";
  out += "<g stroke=\"#222222\" stroke-width=\"1.00\" stroke-linejoin=\"round\">\n";

  if (tiling == nullptr || style.show_colors) {
    for (int i = 0; i < region.cell_count(); ++i) {
      const char* fill = "#ffffff";
      if (style.show_colors) fill = region.color(i) == Color::Black ? "#555555" : "#eeeeee";
      out += "<polygon class=\"cell\" points=\"" + points(convex_outline(lat, cell_points(i))) +
             "\" fill=\"" + fill + "\"" + (tiling ? " fill-opacity=\"0.35\"" : "") + "/>\n";
    }
  }
  if (tiling != nullptr) {
    for (const auto& [a, b] : tiling->tiles()) {
      std::vector<Point> pts = cell_points(a);
      const auto more = cell_points(b);
      pts.insert(pts.end(), more.begin(), more.end());
      const Cell ca = region.cells()[a];
      const Cell cb = region.cells()[b];
      const char* fill;
      if (lat == Lattice::Square) {
        fill = ca.y == cb.y ? "#8fb8de" : "#f2c57c";
      } else {
        const Cell up = ca.down ? cb : ca;
        const Cell down = ca.down ? ca : cb;
        if (down.x == up.x && down.y == up.y) {
          fill = "#e8e8e8";
        } else if (down.x == up.x - 1) {
          fill = "#9a9a9a";
        } else {
          fill = "#c8c8c8";
        }
      }
      out += "<polygon class=\"tile\" points=\"" + points(convex_outline(lat, pts)) + "\" fill=\"" +
             fill + "\"" + (style.show_colors ? " fill-opacity=\"0.65\"" : "") + "/>\n";
    }
  }
  out += "</g>\n";
  if (heights != nullptr) {
    out += "<g font-family=\"monospace\" font-size=\"" + fmt(s * 0.4) +
           "\" text-anchor=\"middle\" fill=\"#b00000\">\n";
    for (int v = 0; v < region.vertex_count(); ++v) {
      const auto q = embed(lat, region.vertices()[v]);
      out += "<text x=\"" + px(q[0]) + "\" y=\"" + py(q[1]) + "\">" +
             std::to_string(heights->values[v]) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

void check_style(const RenderStyle& style) {
  if (style.scale <= 0) throw Error("scale must be positive");
}

}  // namespace

std::string render_region(const Region& region, const RenderStyle& style) {
  check_style(style);
  if (style.format == RenderStyle::Format::Svg) return svg(region, nullptr, style, nullptr);
  if (region.lattice() == Lattice::Square) return ascii_square(region, nullptr, style);
  return ascii_triangle(region, nullptr);
}

std::string render_tiling(const Tiling& tiling, const RenderStyle& style) {
  check_style(style);
  std::optional<HeightFunction> heights;
  if (style.show_heights) heights = heights_from_tiling(tiling);
  if (style.format == RenderStyle::Format::Svg) {
    return svg(tiling.region, &tiling, style, heights ? &*heights : nullptr);
  }
  std::string out = tiling.region.lattice() == Lattice::Square
                        ? ascii_square(tiling.region, &tiling, style)
                        : ascii_triangle(tiling.region, &tiling);
  if (heights) out += height_table(*heights);
  return out;
}

}  // namespace calisson
