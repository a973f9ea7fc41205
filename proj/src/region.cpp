#include "calisson/region.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace calisson {

namespace {

constexpr double kSqrt3Half = 0.86602540378443864676;

// Canonical edge directions. Index 2 exists on the triangular lattice only.
constexpr std::array<Point, 3> kCanonical = {Point{1, 0}, Point{0, 1}, Point{-1, 1}};

int direction_count(Lattice lattice) { return lattice == Lattice::Square ? 4 : 6; }

// Directions in counterclockwise order starting from +x.
std::vector<Point> ccw_directions(Lattice lattice) {
  if (lattice == Lattice::Square) return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
}

int ccw_index(Lattice lattice, Point d) {
  const auto dirs = ccw_directions(lattice);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] == d) return static_cast<int>(i);
  }
  throw std::logic_error("not a lattice direction");
}

// Lattice cells left and right of the canonical edge leaving `p` along
// canonical direction `dir`.
std::pair<Cell, Cell> sides(Lattice lattice, Point p, int dir) {
  const int x = p.x;
  const int y = p.y;
  if (lattice == Lattice::Square) {
    if (dir == 0) return {Cell{x, y}, Cell{x, y - 1}};
    return {Cell{x - 1, y}, Cell{x, y}};
  }
  switch (dir) {
    case 0: return {Cell{x, y, false}, Cell{x, y - 1, true}};
    case 1: return {Cell{x - 1, y, true}, Cell{x, y, false}};
    default: return {Cell{x - 1, y, false}, Cell{x - 1, y, true}};
  }
}

std::vector<Point> cell_corners(Lattice lattice, const Cell& c) {
  if (lattice == Lattice::Square) {
    return {{c.x, c.y}, {c.x + 1, c.y}, {c.x + 1, c.y + 1}, {c.x, c.y + 1}};
  }
  if (!c.down) return {{c.x, c.y}, {c.x + 1, c.y}, {c.x, c.y + 1}};
  return {{c.x + 1, c.y}, {c.x + 1, c.y + 1}, {c.x, c.y + 1}};
}

// Lattice neighbours of a cell in counterclockwise order.
std::vector<Cell> cell_neighbors(Lattice lattice, const Cell& c) {
  if (lattice == Lattice::Square) {
    return {{c.x + 1, c.y}, {c.x, c.y + 1}, {c.x - 1, c.y}, {c.x, c.y - 1}};
  }
  if (!c.down) return {{c.x, c.y, true}, {c.x - 1, c.y, true}, {c.x, c.y - 1, true}};
  return {{c.x, c.y + 1, false}, {c.x, c.y, false}, {c.x + 1, c.y, false}};
}

}  // namespace

Color lattice_color(Lattice lattice, const Cell& cell) {
  if (lattice == Lattice::Triangle) return cell.down ? Color::White : Color::Black;
  return ((cell.x + cell.y) % 2 == 0) ? Color::Black : Color::White;
}

std::array<double, 2> embed(Lattice lattice, Point p) {
  if (lattice == Lattice::Square) return {double(p.x), double(p.y)};
  return {p.x + 0.5 * p.y, kSqrt3Half * p.y};
}

std::array<double, 2> centroid(Lattice lattice, const Cell& cell) {
  if (lattice == Lattice::Square) return {cell.x + 0.5, cell.y + 0.5};
  const double off = cell.down ? 2.0 / 3.0 : 1.0 / 3.0;
  const double u = cell.x + off;
  const double v = cell.y + off;
  return {u + 0.5 * v, kSqrt3Half * v};
}

namespace detail {

struct RegionData {
  Lattice lattice = Lattice::Square;
  std::vector<Cell> cells;
  std::vector<Color> colors;
  int black = 0;

  // Dense lookup over the cell bounding box.
  int cx0 = 0, cy0 = 0, cw = 0, ch = 0;
  std::vector<int> cell_grid;

  std::vector<std::vector<int>> nbrs;
  std::vector<std::vector<int>> nbr_edges;
  std::vector<std::vector<int>> corners;

  std::vector<Point> verts;
  int vx0 = 0, vy0 = 0, vw = 0, vh = 0;
  std::vector<int> vert_grid;

  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> out_edge;  // canonical edge leaving a vertex per direction
  std::vector<std::vector<Incidence>> inc;

  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> vcomp;
  int holes = 0;

  int find_cell(const Cell& c) const {
    const int gx = c.x - cx0;
    const int gy = c.y - cy0;
    if (gx < 0 || gy < 0 || gx >= cw || gy >= ch) return -1;
    const int slots = lattice == Lattice::Square ? 1 : 2;
    return cell_grid[(std::size_t(gy) * cw + gx) * slots + (c.down ? 1 : 0)];
  }

  int find_vertex(Point p) const {
    const int gx = p.x - vx0;
    const int gy = p.y - vy0;
    if (gx < 0 || gy < 0 || gx >= vw || gy >= vh) return -1;
    return vert_grid[std::size_t(gy) * vw + gx];
  }

  void build_cells();
  void build_vertices_and_edges();
  void build_boundary();
};

void RegionData::build_cells() {
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
  for (const Cell& c : cells) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
    x1 = std::max(x1, c.x);
    y1 = std::max(y1, c.y);
  }
  cx0 = x0;
  cy0 = y0;
  cw = x1 - x0 + 1;
  ch = y1 - y0 + 1;
  const int slots = lattice == Lattice::Square ? 1 : 2;
  cell_grid.assign(std::size_t(cw) * ch * slots, -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    cell_grid[(std::size_t(c.y - cy0) * cw + (c.x - cx0)) * slots + (c.down ? 1 : 0)] =
        static_cast<int>(i);
  }

  colors.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    colors[i] = lattice_color(lattice, cells[i]);
    if (colors[i] == Color::Black) ++black;
  }

  nbrs.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const Cell& n : cell_neighbors(lattice, cells[i])) {
      if (const int j = find_cell(n); j >= 0) nbrs[i].push_back(j);
    }
  }

  std::vector<char> seen(cells.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int n : nbrs[c]) {
      if (!seen[n]) {
        seen[n] = 1;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  if (reached != cells.size()) throw RegionError("region is not edge-connected");
}

void RegionData::build_vertices_and_edges() {
  for (const Cell& c : cells) {
    for (const Point& p : cell_corners(lattice, c)) verts.push_back(p);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
  for (const Point& p : verts) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  vx0 = x0;
  vy0 = y0;
  vw = x1 - x0 + 1;
  vh = y1 - y0 + 1;
  vert_grid.assign(std::size_t(vw) * vh, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    vert_grid[std::size_t(verts[i].y - vy0) * vw + (verts[i].x - vx0)] = static_cast<int>(i);
  }

  out_edge.assign(verts.size(), {-1, -1, -1});
  corners.resize(cells.size());
  const int ndirs = lattice == Lattice::Square ? 2 : 3;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const auto pts = cell_corners(lattice, cells[ci]);
    for (const Point& p : pts) corners[ci].push_back(find_vertex(p));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Point a = pts[k];
      const Point b = pts[(k + 1) % pts.size()];
      const Point d{b.x - a.x, b.y - a.y};
      int dir = -1;
      for (int t = 0; t < ndirs; ++t) {
        if (kCanonical[t] == d) dir = t;
        if (kCanonical[t] == Point{-d.x, -d.y}) {
          dir = t;
          a = b;
        }
      }
      const int from = find_vertex(a);
      if (out_edge[from][dir] >= 0) continue;
      Edge e;
      e.from = from;
      e.to = find_vertex(Point{a.x + kCanonical[dir].x, a.y + kCanonical[dir].y});
      std::tie(e.left_cell, e.right_cell) = sides(lattice, a, dir);
      e.left = find_cell(e.left_cell);
      e.right = find_cell(e.right_cell);
      e.left_black = lattice_color(lattice, e.left_cell) == Color::Black;
      out_edge[from][dir] = static_cast<int>(edges.size());
      edges.push_back(e);
    }
  }

  nbr_edges.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (int j : nbrs[i]) {
      int shared = -1;
      for (int v : corners[i]) {
        for (int t = 0; t < ndirs; ++t) {
          const int e = out_edge[v][t];
          if (e < 0) continue;
          const Edge& ed = edges[e];
          if ((ed.left == int(i) && ed.right == j) || (ed.left == j && ed.right == int(i))) shared = e;
        }
      }
      nbr_edges[i].push_back(shared);
    }
  }

  inc.resize(verts.size());
  const auto dirs = ccw_directions(lattice);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (const Point& d : dirs) {
      const int w = find_vertex(Point{verts[v].x + d.x, verts[v].y + d.y});
      if (w < 0) continue;
      for (int t = 0; t < ndirs; ++t) {
        if (kCanonical[t] == d && out_edge[v][t] >= 0) {
          inc[v].push_back({out_edge[v][t], w, true});
        } else if (kCanonical[t] == Point{-d.x, -d.y} && out_edge[w][t] >= 0) {
          inc[v].push_back({out_edge[w][t], w, false});
        }
      }
    }
  }

  const long euler = long(verts.size()) - long(edges.size()) + long(cells.size());
  holes = static_cast<int>(1 - euler);
}

void RegionData::build_boundary() {
  // Directed boundary half-edges keep the region on their left.
  struct Half {
    int from, to, dir;
  };
  std::vector<Half> halves;
  std::vector<std::vector<int>> outgoing(verts.size());
  for (const Edge& e : edges) {
    if (!e.boundary()) continue;
    const Point d{verts[e.to].x - verts[e.from].x, verts[e.to].y - verts[e.from].y};
    Half h = e.left >= 0 ? Half{e.from, e.to, ccw_index(lattice, d)}
                         : Half{e.to, e.from, ccw_index(lattice, Point{-d.x, -d.y})};
    outgoing[h.from].push_back(static_cast<int>(halves.size()));
    halves.push_back(h);
  }

  // Successor: the sharpest right turn, which keeps distinct components of
  // the complement on distinct cycles.
  const int k = direction_count(lattice);
  std::vector<int> next(halves.size(), -1);
  for (std::size_t i = 0; i < halves.size(); ++i) {
    int best = -1;
    int best_turn = k;
    for (int j : outgoing[halves[i].to]) {
      int turn = ((halves[j].dir - halves[i].dir) % k + k) % k;
      if (turn > k / 2) turn -= k;
      if (turn < best_turn) {
        best_turn = turn;
        best = j;
      }
    }
    next[i] = best;
  }

  std::vector<char> used(halves.size(), 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    for (int start : outgoing[v]) {
      if (used[start]) continue;
      std::vector<int> cycle;
      int h = start;
      while (!used[h]) {
        used[h] = 1;
        cycle.push_back(halves[h].from);
        h = next[h];
      }
      if (h != start) throw std::logic_error("boundary successor map is not a permutation");
      cycles.push_back(std::move(cycle));
    }
  }
  if (static_cast<int>(cycles.size()) != holes + 1) {
    throw std::logic_error("boundary cycle count disagrees with Euler characteristic");
  }

  vcomp.resize(verts.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int v : cycles[c]) {
      auto& list = vcomp[v];
      if (std::find(list.begin(), list.end(), int(c)) == list.end()) list.push_back(int(c));
    }
  }
}

}  // namespace detail

Region Region::from_cells(Lattice lattice, std::vector<Cell> cells) {
  if (cells.empty()) throw RegionError("region is empty");
  if (lattice == Lattice::Square) {
    for (const Cell& c : cells) {
      if (c.down) throw RegionError("square cells have no orientation");
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  auto data = std::make_shared<detail::RegionData>();
  data->lattice = lattice;
  data->cells = std::move(cells);
  data->build_cells();
  data->build_vertices_and_edges();
  data->build_boundary();
  Region r;
  r.data_ = std::move(data);
  return r;
}

Lattice Region::lattice() const { return data_->lattice; }
std::span<const Cell> Region::cells() const { return data_->cells; }
int Region::cell_count() const { return static_cast<int>(data_->cells.size()); }
int Region::find(const Cell& cell) const { return data_->find_cell(cell); }
Color Region::color(int cell) const { return data_->colors.at(cell); }
int Region::black_count() const { return data_->black; }
int Region::white_count() const { return cell_count() - data_->black; }
std::span<const int> Region::neighbors(int cell) const { return data_->nbrs[cell]; }
std::span<const int> Region::corners(int cell) const { return data_->corners[cell]; }
std::span<const Point> Region::vertices() const { return data_->verts; }
int Region::vertex_count() const { return static_cast<int>(data_->verts.size()); }
int Region::find_vertex(Point p) const { return data_->find_vertex(p); }
std::span<const Edge> Region::edges() const { return data_->edges; }
std::span<const Incidence> Region::incidences(int vertex) const { return data_->inc[vertex]; }
const std::vector<std::vector<int>>& Region::boundary_cycles() const { return data_->cycles; }
std::span<const int> Region::boundary_components(int vertex) const { return data_->vcomp[vertex]; }
int Region::hole_count() const { return data_->holes; }

int Region::shared_edge(int a, int b) const {
  const auto& n = data_->nbrs[a];
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == b) return data_->nbr_edges[a][i];
  }
  return -1;
}

int Region::edge_between(int u, int v) const {
  for (const Incidence& in : data_->inc[u]) {
    if (in.other == v) return in.edge;
  }
  return -1;
}

bool Region::same_cells(const Region& other) const {
  if (data_ == other.data_) return true;
  return lattice() == other.lattice() && data_->cells == other.data_->cells;
}

Region parse_region(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
      }
      lines.push_back(line);
    }
  }
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size()) throw ParseError("empty region file");
  Lattice lattice;
  if (lines[first] == "square") {
    lattice = Lattice::Square;
  } else if (lines[first] == "triangle") {
    lattice = Lattice::Triangle;
  } else {
    throw ParseError("line " + std::to_string(first + 1) + ": expected `square` or `triangle`");
  }
  std::size_t last = lines.size();
  while (last > first + 1 && lines[last - 1].empty()) --last;

  const int rows = static_cast<int>(last - first - 1);
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    const std::string& row = lines[first + 1 + r];
    const int y = rows - 1 - r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const char ch = row[i];
      if (ch == '.') continue;
      if (ch != '#') {
        throw ParseError("line " + std::to_string(first + 2 + r) + ", column " +
                         std::to_string(i + 1) + ": unexpected character '" + ch + "'");
      }
      if (lattice == Lattice::Square) {
        cells.push_back(Cell{int(i), y});
      } else {
        cells.push_back(Cell{int(i / 2), y, i % 2 == 1});
      }
    }
  }
  if (cells.empty()) throw ParseError("region has no cells");
  return Region::from_cells(lattice, std::move(cells));
}

std::string serialize_region(const Region& region) {
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int y1 = std::numeric_limits<int>::min();
  for (const Cell& c : region.cells()) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  const bool square = region.lattice() == Lattice::Square;
  std::vector<std::string> rows(std::size_t(y1 - y0 + 1));
  for (const Cell& c : region.cells()) {
    std::string& row = rows[std::size_t(y1 - c.y)];
    const std::size_t pos = square ? std::size_t(c.x - x0) : std::size_t(2 * (c.x - x0) + (c.down ? 1 : 0));
    if (row.size() <= pos) row.resize(pos + 1, '.');
    row[pos] = '#';
  }
  std::string out = square ? "square\n" : "triangle\n";
  for (const std::string& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

Color color(const Region& region, const Cell& cell) {
  const int i = region.find(cell);
  if (i < 0) throw RegionError("cell is not in the region");
  return region.color(i);
}

std::vector<std::vector<Point>> boundary_cycles(const Region& region) {
  std::vector<std::vector<Point>> out;
  for (const auto& cycle : region.boundary_cycles()) {
    auto& pts = out.emplace_back();
    for (int v : cycle) pts.push_back(region.vertices()[v]);
  }
  return out;
}

BipartiteGraph adjacency(const Region& region) {
  BipartiteGraph g;
  const int n = region.cell_count();
  g.rotation.resize(n);
  g.position.resize(n);
  for (int i = 0; i < n; ++i) {
    (region.color(i) == Color::Black ? g.black : g.white).push_back(i);
    g.position[i] = centroid(region.lattice(), region.cells()[i]);
  }
  for (int b : g.black) {
    for (int w : region.neighbors(b)) g.edges.emplace_back(b, w);
  }
  // Rotation order follows the counterclockwise neighbour order of cells.
  for (int i = 0; i < n; ++i) g.rotation[i].assign(region.neighbors(i).size(), -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [b, w] = g.edges[e];
    for (auto [cell, other] : {std::pair{b, w}, std::pair{w, b}}) {
      const auto nb = region.neighbors(cell);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (nb[k] == other) g.rotation[cell][k] = static_cast<int>(e);
      }
    }
  }
  return g;
}

FaceSet face_walk(const BipartiteGraph& g) {
  // Dart 2e runs first->second along edge e, dart 2e+1 runs back.
  const std::size_t darts = g.edges.size() * 2;
  std::vector<char> used(darts, 0);
  auto head = [&](std::size_t d) {
    const auto& e = g.edges[d / 2];
    return d % 2 == 0 ? e.second : e.first;
  };
  auto tail = [&](std::size_t d) {
    const auto& e = g.edges[d / 2];
    return d % 2 == 0 ? e.first : e.second;
  };
  auto next = [&](std::size_t d) -> std::size_t {
    const int v = head(d);
    const int e = static_cast<int>(d / 2);
    const auto& rot = g.rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), e);
    if (it == rot.end()) throw Error("rotation system does not contain an incident edge");
    const std::size_t pos = std::size_t(it - rot.begin());
    const int ne = rot[(pos + rot.size() - 1) % rot.size()];
    return g.edges[ne].first == v ? std::size_t(ne) * 2 : std::size_t(ne) * 2 + 1;
  };

  FaceSet out;
  for (std::size_t start = 0; start < darts; ++start) {
    if (used[start]) continue;
    Face f;
    std::size_t d = start;
    do {
      if (used[d]) throw Error("face walk revisited a dart");
      used[d] = 1;
      f.cells.push_back(tail(d));
      f.edges.push_back(static_cast<int>(d / 2));
      d = next(d);
    } while (d != start);
    double area = 0.0;
    for (std::size_t i = 0; i < f.cells.size(); ++i) {
      const auto& p = g.position[f.cells[i]];
      const auto& q = g.position[f.cells[(i + 1) % f.cells.size()]];
      area += p[0] * q[1] - p[1] * q[0];
    }
    f.signed_area = area / 2.0;
    out.faces.push_back(std::move(f));
  }
  if (out.faces.empty()) {
    // A single vertex has one (outer) face with no darts.
    out.faces.emplace_back();
  }
  for (std::size_t i = 1; i < out.faces.size(); ++i) {
    if (out.faces[i].signed_area < out.faces[out.outer].signed_area) out.outer = static_cast<int>(i);
  }
  return out;
}

namespace {

// Path search for one cut, from `hole` to any component in `targets`.
std::optional<Cut> find_cut(const Region& region, int hole, const std::vector<char>& targets) {
  const auto& cycles = region.boundary_cycles();
  const auto verts = region.vertices();
  auto on_target = [&](int v) {
    for (int c : region.boundary_components(v)) {
      if (targets[c]) return c;
    }
    return -1;
  };

  std::vector<int> hole_verts(cycles[hole].begin(), cycles[hole].end());
  std::sort(hole_verts.begin(), hole_verts.end());
  hole_verts.erase(std::unique(hole_verts.begin(), hole_verts.end()), hole_verts.end());

  for (int v : hole_verts) {
    if (const int c = on_target(v); c >= 0) return Cut{{verts[v]}, hole, c};
  }

  // Straight walk in +x from the rightmost (then lowest) hole vertex.
  int start = hole_verts.front();
  for (int v : hole_verts) {
    if (verts[v].x > verts[start].x) start = v;
  }
  {
    std::vector<Point> path{verts[start]};
    int cur = start;
    while (true) {
      const int nxt = region.find_vertex(Point{verts[cur].x + 1, verts[cur].y});
      if (nxt < 0) break;
      const int e = region.edge_between(cur, nxt);
      if (e < 0 || !region.edges()[e].interior()) break;
      path.push_back(verts[nxt]);
      if (const int c = on_target(nxt); c >= 0) return Cut{path, hole, c};
      if (region.on_boundary(nxt)) break;
      cur = nxt;
    }
  }

  // Obstructed: breadth-first search through interior vertices, expanding
  // neighbours counterclockwise from +x, so ties resolve deterministically.
  const int n = region.vertex_count();
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int v : hole_verts) {
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Incidence& in : region.incidences(v)) {
      const int w = in.other;
      if (parent[w] != -2 || !region.edges()[in.edge].interior()) continue;
      parent[w] = v;
      if (const int c = on_target(w); c >= 0) {
        std::vector<Point> path;
        for (int u = w; u >= 0; u = parent[u]) path.push_back(verts[u]);
        std::reverse(path.begin(), path.end());
        return Cut{path, hole, c};
      }
      if (!region.on_boundary(w)) queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Cut> cuts_basis(const Region& region) {
  const int holes = region.hole_count();
  std::vector<std::optional<Cut>> cuts(std::size_t(holes) + 1);
  std::vector<char> connected(std::size_t(holes) + 1, 0);
  connected[0] = 1;
  std::vector<char> outer_only(std::size_t(holes) + 1, 0);
  outer_only[0] = 1;

  // First pass: cuts to the outer boundary. Later passes let blocked holes
  // attach to holes that are already connected.
  for (int h = 1; h <= holes; ++h) {
    if ((cuts[h] = find_cut(region, h, outer_only))) connected[h] = 1;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int h = 1; h <= holes; ++h) {
      if (connected[h]) continue;
      if ((cuts[h] = find_cut(region, h, connected))) {
        connected[h] = 1;
        progress = true;
      }
    }
  }
  std::vector<Cut> out;
  for (int h = 1; h <= holes; ++h) {
    if (!cuts[h]) throw std::logic_error("no cut joins a hole to the outer boundary");
    out.push_back(*cuts[h]);
  }
  return out;
}

Region make_rectangle(int rows, int cols) {
  if (rows < 1 || cols < 1) throw RegionError("rectangle sides must be positive");
  std::vector<Cell> cells;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) cells.push_back(Cell{x, y});
  }
  return Region::from_cells(Lattice::Square, std::move(cells));
}

Region make_hexagon(int r, int c, int m) {
  if (r < 1 || c < 1 || m < 1) throw RegionError("hexagon sides must be positive");
  // Corner (c, 0); in coordinates u = x - c, v = y the hexagon is
  // 0 <= v <= m + c, -c <= u <= r, 0 <= u + v <= r + m.
  std::vector<Cell> cells;
  for (int y = 0; y < m + c; ++y) {
    for (int x = 0; x <= r + c; ++x) {
      for (bool down : {false, true}) {
        const double off = down ? 2.0 / 3.0 : 1.0 / 3.0;
        const double u = x - c + off;
        const double v = y + off;
        if (v > 0 && v < m + c && u > -c && u < r && u + v > 0 && u + v < r + m) {
          cells.push_back(Cell{x, y, down});
        }
      }
    }
  }
  return Region::from_cells(Lattice::Triangle, std::move(cells));
}

Region make_triangle(int n) {
  if (n < 1) throw RegionError("triangle side must be positive");
  std::vector<Cell> cells;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x + y < n; ++x) {
      cells.push_back(Cell{x, y, false});
      if (x + y + 2 <= n) cells.push_back(Cell{x, y, true});
    }
  }
  return Region::from_cells(Lattice::Triangle, std::move(cells));
}

Region make_random(Lattice lattice, int cells, std::uint64_t seed) {
  if (cells < 1) throw RegionError("cell count must be positive");
  std::mt19937_64 rng(seed);
  std::set<Cell> chosen{Cell{0, 0, false}};
  std::set<Cell> frontier;
  for (const Cell& n : cell_neighbors(lattice, Cell{0, 0, false})) frontier.insert(n);
  while (int(chosen.size()) < cells) {
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const Cell next = *std::next(frontier.begin(), std::ptrdiff_t(pick(rng)));
    frontier.erase(next);
    chosen.insert(next);
    for (const Cell& n : cell_neighbors(lattice, next)) {
      if (!chosen.count(n)) frontier.insert(n);
    }
  }
  return Region::from_cells(lattice, std::vector<Cell>(chosen.begin(), chosen.end()));
}

std::optional<RectangleShape> recognize_rectangle(const Region& region) {
  if (region.lattice() != Lattice::Square) return std::nullopt;
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
  for (const Cell& c : region.cells()) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
    x1 = std::max(x1, c.x);
    y1 = std::max(y1, c.y);
  }
  const int rows = y1 - y0 + 1;
  const int cols = x1 - x0 + 1;
  if (long(rows) * cols != region.cell_count()) return std::nullopt;
  return RectangleShape{rows, cols};
}

std::optional<HexagonShape> recognize_hexagon(const Region& region) {
  if (region.lattice() != Lattice::Triangle) return std::nullopt;
  int umin = std::numeric_limits<int>::max(), vmin = umin, smin = umin;
  int umax = std::numeric_limits<int>::min(), vmax = umax, smax = umax;
  for (const Point& p : region.vertices()) {
    umin = std::min(umin, p.x);
    umax = std::max(umax, p.x);
    vmin = std::min(vmin, p.y);
    vmax = std::max(vmax, p.y);
    smin = std::min(smin, p.x + p.y);
    smax = std::max(smax, p.x + p.y);
  }
  const int px = smin - vmin;
  const int c = px - umin;
  const int r = umax - px;
  const int m = vmax - vmin - c;
  if (r < 1 || c < 1 || m < 1 || smax - smin != r + m) return std::nullopt;
  const Region model = make_hexagon(r, c, m);
  if (model.cell_count() != region.cell_count()) return std::nullopt;
  const int dx = px - c;
  const int dy = vmin;
  for (const Cell& cell : model.cells()) {
    if (!region.contains(Cell{cell.x + dx, cell.y + dy, cell.down})) return std::nullopt;
  }
  return HexagonShape{r, c, m};
}

}  // namespace calisson
