#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "calisson/error.hpp"

namespace calisson {

enum class Lattice : std::uint8_t { Square, Triangle };

enum class Color : std::uint8_t { Black, White };

// A unit cell. On the square lattice (x, y) is the square [x,x+1]x[y,y+1].
// On the triangular lattice, lattice point (x, y) embeds at
// x*(1,0) + y*(1/2, sqrt(3)/2); the up-cell (x, y) has corners (x,y),
// (x+1,y), (x,y+1) and the down-cell (x, y) has corners (x+1,y), (x,y+1),
// (x+1,y+1). `down` is always false for square cells.
struct Cell {
  int x = 0;
  int y = 0;
  bool down = false;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Lexicographic in (y, x, orientation).
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.down <=> b.down;
  }
};

// A lattice point. Ordered lexicographically in (y, x).
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// Black iff x+y is even (squares) or the cell is an up-triangle.
Color lattice_color(Lattice lattice, const Cell& cell);

// Embedded plane coordinates of a lattice point or of a cell's centroid.
std::array<double, 2> embed(Lattice lattice, Point p);
std::array<double, 2> centroid(Lattice lattice, const Cell& cell);

// A lattice edge stored in its canonical direction: (1,0) or (0,1) on both
// lattices, plus (-1,1) on the triangular lattice. `left_cell`/`right_cell`
// are the lattice cells on either side of the directed edge; `left`/`right`
// are their region indices or -1 when the cell is absent.
struct Edge {
  int from = 0;
  int to = 0;
  Cell left_cell;
  Cell right_cell;
  int left = -1;
  int right = -1;
  bool left_black = false;

  bool interior() const { return left >= 0 && right >= 0; }
  bool boundary() const { return (left >= 0) != (right >= 0); }
};

// An edge seen from one of its endpoints.
struct Incidence {
  int edge = 0;
  int other = 0;      // vertex index at the far end
  bool forward = true;  // true when leaving along the canonical direction
};

namespace detail {
struct RegionData;
}

// A finite, edge-connected set of unit cells with its derived combinatorics.
// Immutable; copies share the same underlying data.
class Region {
 public:
  // Throws RegionError for an empty or disconnected cell set.
  static Region from_cells(Lattice lattice, std::vector<Cell> cells);

  Lattice lattice() const;
  std::span<const Cell> cells() const;
  int cell_count() const;
  // Region index of `cell`, or -1.
  int find(const Cell& cell) const;
  bool contains(const Cell& cell) const { return find(cell) >= 0; }
  Color color(int cell) const;
  int black_count() const;
  int white_count() const;
  bool balanced() const { return black_count() == white_count(); }

  // Neighbouring cells (sharing a side) in counterclockwise order.
  std::span<const int> neighbors(int cell) const;
  // Index of the edge shared by two adjacent cells, or -1.
  int shared_edge(int a, int b) const;
  // Corner vertex indices of a cell, counterclockwise.
  std::span<const int> corners(int cell) const;

  std::span<const Point> vertices() const;
  int vertex_count() const;
  int find_vertex(Point p) const;
  std::span<const Edge> edges() const;
  // Edges at a vertex, ordered counterclockwise starting from +x.
  std::span<const Incidence> incidences(int vertex) const;
  // Edge joining two vertices, or -1.
  int edge_between(int u, int v) const;

  // Boundary cycles as vertex index sequences. Cycle 0 is the outer boundary
  // (counterclockwise, region on the left); the rest bound holes (clockwise,
  // region on the left). Each cycle starts at its smallest vertex.
  const std::vector<std::vector<int>>& boundary_cycles() const;
  // Boundary cycles the vertex lies on (empty for interior vertices).
  std::span<const int> boundary_components(int vertex) const;
  bool on_boundary(int vertex) const { return !boundary_components(vertex).empty(); }
  int hole_count() const;
  bool simply_connected() const { return hole_count() == 0; }

  // The smallest vertex (y, then x); it lies on the outer boundary.
  int base_vertex() const { return 0; }

  bool same_cells(const Region& other) const;
  friend bool operator==(const Region& a, const Region& b) { return a.same_cells(b); }

 private:
  std::shared_ptr<const detail::RegionData> data_;
};

// Region file I/O. First line `square` or `triangle`; then rows from the top
// (highest y) to the bottom (y = 0). Square rows: `#` = cell (x, y). Triangle
// rows: position 2k is up-cell (k, y), 2k+1 is down-cell (k, y). Trailing
// `.` may be omitted.
Region parse_region(std::string_view text);
// Inverse of parse_region up to translation: the output puts the smallest x
// and the smallest y at zero.
std::string serialize_region(const Region& region);

// Throws RegionError if the cell is not in the region.
Color color(const Region& region, const Cell& cell);

// Boundary cycles as lattice points.
std::vector<std::vector<Point>> boundary_cycles(const Region& region);

// The cell-adjacency graph embedded by cell centroids.
struct BipartiteGraph {
  std::vector<int> black;  // region cell indices in lexicographic order
  std::vector<int> white;
  // (black cell, white cell) region indices, one per shared side.
  std::vector<std::pair<int, int>> edges;
  // Per region cell: incident graph edge ids in counterclockwise order.
  std::vector<std::vector<int>> rotation;
  std::vector<std::array<double, 2>> position;

  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int other_end(int edge, int cell) const {
    return edges[edge].first == cell ? edges[edge].second : edges[edge].first;
  }
};

BipartiteGraph adjacency(const Region& region);

// One face of the embedded graph: the closed walk keeping the face on the
// left. `edges[i]` joins `cells[i]` to `cells[i+1]` (cyclically).
struct Face {
  std::vector<int> cells;
  std::vector<int> edges;
  double signed_area = 0.0;
  int size() const { return static_cast<int>(edges.size()); }
};

struct FaceSet {
  std::vector<Face> faces;
  int outer = 0;
};

// Traces every face of the rotation system. Throws Error if the rotation
// system is inconsistent (a dart is reached twice).
FaceSet face_walk(const BipartiteGraph& graph);

// An oriented simple lattice path joining two boundary components. A cut of
// a single vertex (no edges) arises when a hole touches another boundary
// component at a vertex.
struct Cut {
  std::vector<Point> path;
  int from_component = 0;  // the hole the cut starts on
  int to_component = 0;    // usually 0, the outer boundary
};

// One cut per hole, in hole order.
std::vector<Cut> cuts_basis(const Region& region);

// Generated shapes.
Region make_rectangle(int rows, int cols);
// Center-symmetric hexagon whose lozenge tilings encode plane partitions in
// an r x c x m box: sides r along (1,0), m along (0,1), c along (-1,1).
Region make_hexagon(int r, int c, int m);
// Triangle of side n (n(n+1)/2 up cells, n(n-1)/2 down cells).
Region make_triangle(int n);
// A random edge-connected region of `cells` cells grown from the origin; each
// step adds a uniformly chosen cell adjacent to the current set.
Region make_random(Lattice lattice, int cells, std::uint64_t seed);

struct RectangleShape {
  int rows = 0;
  int cols = 0;
};
struct HexagonShape {
  int r = 0;
  int c = 0;
  int m = 0;
};
// Exact comparison against generated templates, up to translation.
std::optional<RectangleShape> recognize_rectangle(const Region& region);
std::optional<HexagonShape> recognize_hexagon(const Region& region);

}  // namespace calisson
