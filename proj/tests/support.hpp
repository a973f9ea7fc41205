#pragma once

// Independent oracles and region families shared by the unit tests and the
// acceptance binary. Nothing here goes through Region's derived structure:
// the oracles work on raw cell coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "calisson/region.hpp"

namespace oracle {

using calisson::Cell;
using calisson::Lattice;

inline std::vector<Cell> raw_neighbors(Lattice lat, const Cell& c) {
  if (lat == Lattice::Square) {
    return {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
  }
  if (!c.down) return {{c.x, c.y, true}, {c.x - 1, c.y, true}, {c.x, c.y - 1, true}};
  return {{c.x, c.y, false}, {c.x + 1, c.y, false}, {c.x, c.y + 1, false}};
}

// Perfect matchings of the cell adjacency graph by plain recursion on the
// smallest uncovered cell. Stops counting at `cap`.
inline std::uint64_t count_matchings(Lattice lat, const std::vector<Cell>& cells,
                                     std::uint64_t cap = UINT64_MAX) {
  std::set<Cell> free(cells.begin(), cells.end());
  std::uint64_t total = 0;
  auto go = [&](auto&& self) -> void {
    if (total >= cap) return;
    if (free.empty()) {
      ++total;
      return;
    }
    const Cell first = *free.begin();
    free.erase(free.begin());
    for (const Cell& n : raw_neighbors(lat, first)) {
      auto it = free.find(n);
      if (it == free.end()) continue;
      free.erase(it);
      self(self);
      free.insert(n);
    }
    free.insert(first);
  };
  go(go);
  return total;
}

inline bool has_matching(Lattice lat, const std::vector<Cell>& cells) {
  return count_matchings(lat, cells, 1) > 0;
}

// Domino tilings of a rows x cols rectangle by a column-profile transfer
// matrix.
inline std::uint64_t rectangle_transfer(int rows, int cols) {
  const std::uint32_t full = (1u << rows) - 1;
  std::vector<std::uint64_t> cur(std::size_t(1) << rows, 0);
  cur[0] = 1;
  for (int col = 0; col < cols; ++col) {
    std::vector<std::uint64_t> next(cur.size(), 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (cur[mask] == 0) continue;
      // Fill column `col`: cells in `mask` are already covered from the left.
      auto fill = [&](auto&& self, int row, std::uint32_t out) -> void {
        if (row == rows) {
          next[out] += cur[mask];
          return;
        }
        if (mask >> row & 1u) {
          self(self, row + 1, out);
          return;
        }
        self(self, row + 1, out | (1u << row));  // horizontal domino
        if (row + 1 < rows && !(mask >> (row + 1) & 1u)) self(self, row + 2, out);
      };
      fill(fill, 0, 0);
    }
    cur = std::move(next);
  }
  return cur[0];
}

inline std::uint64_t fibonacci(int n) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Holes as bounded components of the complement, cells joined across sides.
inline int hole_count(Lattice lat, const std::vector<Cell>& cells) {
  int x0 = cells[0].x, x1 = x0, y0 = cells[0].y, y1 = y0;
  for (const Cell& c : cells) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  --x0, --y0, ++x1, ++y1;
  const std::set<Cell> in(cells.begin(), cells.end());
  std::set<Cell> seen;
  int components = 0;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      for (bool down : {false, true}) {
        if (down && lat == Lattice::Square) continue;
        const Cell s{x, y, down};
        if (in.count(s) || seen.count(s)) continue;
        ++components;
        std::vector<Cell> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
          const Cell c = stack.back();
          stack.pop_back();
          for (const Cell& n : raw_neighbors(lat, c)) {
            if (n.x < x0 || n.x > x1 || n.y < y0 || n.y > y1) continue;
            if (in.count(n) || seen.count(n)) continue;
            seen.insert(n);
            stack.push_back(n);
          }
        }
      }
    }
  }
  return components - 1;
}

inline bool connected(Lattice lat, const std::vector<Cell>& cells) {
  if (cells.empty()) return false;
  const std::set<Cell> in(cells.begin(), cells.end());
  std::set<Cell> seen{cells[0]};
  std::vector<Cell> stack{cells[0]};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell& n : raw_neighbors(lat, c)) {
      if (in.count(n) && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == in.size();
}

// Translate so the smallest cell (in (y, x, orientation) order) sits at the
// origin; translations keep orientations.
inline std::vector<Cell> normalize(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  const int dx = cells[0].x, dy = cells[0].y;
  for (Cell& c : cells) {
    c.x -= dx;
    c.y -= dy;
  }
  return cells;
}

// Translate so the minimum x and the minimum y are both zero.
inline std::vector<Cell> to_origin(std::vector<Cell> cells) {
  int x0 = cells[0].x, y0 = cells[0].y;
  for (const Cell& c : cells) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
  }
  for (Cell& c : cells) {
    c.x -= x0;
    c.y -= y0;
  }
  return cells;
}

// Every fixed polyomino / polyiamond with 1..max_cells cells.
inline std::vector<std::vector<Cell>> fixed_animals(Lattice lat, int max_cells) {
  std::vector<std::vector<Cell>> all;
  std::set<std::vector<Cell>> level;
  level.insert({Cell{0, 0, false}});
  if (lat == Lattice::Triangle) level.insert({Cell{0, 0, true}});
  for (int k = 1; k <= max_cells; ++k) {
    all.insert(all.end(), level.begin(), level.end());
    if (k == max_cells) break;
    std::set<std::vector<Cell>> next;
    for (const auto& a : level) {
      const std::set<Cell> in(a.begin(), a.end());
      for (const Cell& c : a) {
        for (const Cell& n : raw_neighbors(lat, c)) {
          if (in.count(n)) continue;
          std::vector<Cell> b = a;
          b.push_back(n);
          next.insert(normalize(std::move(b)));
        }
      }
    }
    level = std::move(next);
  }
  return all;
}

// Visits every connected subset of a window of the lattice with at least
// `min_cells` cells, once per translation class: only placements touching
// x = 0 and y = 0 are reported. The square window is cols x rows; the
// triangular one holds the up and down cells (x, y) with x < cols, y < rows.
// Subsets are grown by Redelmeier's method.
template <typename Visit>
void for_each_window_subset(Lattice lat, int cols, int rows, int min_cells, Visit&& visit) {
  std::vector<Cell> slots;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      slots.push_back(Cell{x, y, false});
      if (lat == Lattice::Triangle) slots.push_back(Cell{x, y, true});
    }
  }
  const int n = static_cast<int>(slots.size());
  std::map<Cell, int> index;
  for (int i = 0; i < n; ++i) index[slots[i]] = i;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const Cell& c : raw_neighbors(lat, slots[i])) {
      if (auto it = index.find(c); it != index.end()) adj[i].push_back(it->second);
    }
  }
  std::vector<char> marked(std::size_t(n), 0);
  std::vector<Cell> subset;
  int root = 0;
  auto report = [&] {
    if (int(subset.size()) < min_cells) return;
    bool x0 = false, y0 = false;
    for (const Cell& c : subset) {
      x0 = x0 || c.x == 0;
      y0 = y0 || c.y == 0;
    }
    if (x0 && y0) visit(subset);
  };
  auto grow = [&](auto&& self, std::vector<int> untried) -> void {
    while (!untried.empty()) {
      const int v = untried.back();
      untried.pop_back();
      subset.push_back(slots[v]);
      report();
      std::vector<int> added;
      for (int u : adj[v]) {
        if (u > root && !marked[u]) {
          marked[u] = 1;
          added.push_back(u);
        }
      }
      std::vector<int> next = untried;
      next.insert(next.end(), added.begin(), added.end());
      self(self, std::move(next));
      for (int u : added) marked[u] = 0;
      subset.pop_back();
    }
  };
  for (root = 0; root < n; ++root) {
    marked[root] = 1;
    grow(grow, std::vector<int>{root});
    marked[root] = 0;
  }
}

// Connected subsets of a window, as above, optionally without holes.
inline std::vector<std::vector<Cell>> window_subsets(Lattice lat, int cols, int rows, int min_cells,
                                                     bool simply_connected_only) {
  std::vector<std::vector<Cell>> out;
  for_each_window_subset(lat, cols, rows, min_cells, [&](const std::vector<Cell>& cells) {
    if (simply_connected_only && hole_count(lat, cells) != 0) return;
    out.push_back(cells);
  });
  return out;
}

inline calisson::Region region_of(Lattice lat, const std::vector<Cell>& cells) {
  return calisson::Region::from_cells(lat, cells);
}

inline calisson::Region square(std::vector<std::string> rows) {
  std::string text = "square\n";
  for (const auto& r : rows) text += r + "\n";
  return calisson::parse_region(text);
}

// 3x3 with the centre removed.
inline calisson::Region ring() { return square({"###", "#.#", "###"}); }

// The balanced 6-cell region that still has no tiling.
inline calisson::Region pendant_trap() {
  return calisson::Region::from_cells(
      Lattice::Square, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, -1}});
}

}  // namespace oracle
