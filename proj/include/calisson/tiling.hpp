#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "calisson/region.hpp"

namespace calisson {

inline constexpr std::size_t kDefaultTilingLimit = 1'000'000;

// A perfect matching of the region's cells: `mate[i]` is the cell sharing a
// tile with cell i.
struct Tiling {
  Region region;
  std::vector<int> mate;

  // Tiles as (smaller index, larger index), sorted.
  std::vector<std::pair<int, int>> tiles() const;

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.mate == b.mate && a.region == b.region;
  }
};

bool is_perfect_matching(const Region& region, std::span<const int> mate);
// Throws TilingError if `mate` is not a perfect matching of the region.
Tiling make_tiling(const Region& region, std::vector<int> mate);
Tiling make_tiling(const Region& region, std::span<const std::pair<Cell, Cell>> tiles);

// Tiling files: one tile per line, `x1 y1 x2 y2` on the square lattice and
// `x1 y1 o1 x2 y2 o2` with o in {u, d} on the triangular lattice.
Tiling parse_tiling(const Region& region, std::string_view text);
std::string serialize_tiling(const Tiling& tiling);

// Streams every perfect matching in a deterministic order: backtracking on
// the first uncovered cell, trying neighbours counterclockwise, with cells
// of a single free neighbour matched immediately. The visitor returns false
// to stop early.
void for_each_tiling(const Region& region,
                     const std::function<bool(std::span<const int> mate)>& visit);
// Number of tilings, without storing them.
std::uint64_t count_by_enumeration(const Region& region);
// All tilings; throws LimitExceeded when there are more than `limit`.
std::vector<Tiling> enumerate_tilings(const Region& region,
                                      std::size_t limit = kDefaultTilingLimit);
// Some tiling, via augmenting paths; nullopt when none exists.
std::optional<Tiling> find_tiling(const Region& region);

// A flip location: the lowest-left cell of a 2x2 block (square lattice) or
// the centre vertex of a unit hexagon (triangular lattice).
struct Flip {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Flip&, const Flip&) = default;
};

std::vector<Flip> available_flips(const Tiling& tiling);
// Throws TilingError when the flip is not available.
Tiling apply_flip(const Tiling& tiling, const Flip& flip);

// Flip distance from the height-difference formula. Requires a simply
// connected region; throws RegionError otherwise.
int distance(const Tiling& a, const Tiling& b);
// Breadth-first flip distance; nullopt when `b` is unreachable from `a`.
// Throws LimitExceeded if more than `limit` tilings are visited.
std::optional<int> bfs_distance(const Tiling& a, const Tiling& b,
                                std::size_t limit = kDefaultTilingLimit);

// The graph on all tilings of a region whose edges are single flips.
struct FlipGraph {
  std::vector<Tiling> tilings;  // enumeration order
  std::vector<std::vector<int>> adjacent;
  std::vector<int> component;  // component id per tiling, numbered by first tiling
  int component_count = 0;

  std::vector<int> component_sizes() const;
  // -1 marks unreachable tilings.
  std::vector<int> distances_from(int source) const;
  // Index of a tiling, or -1.
  int index_of(const Tiling& tiling) const;
  std::size_t edge_count() const;

 private:
  friend FlipGraph flip_graph(const Region&, std::size_t);
  std::vector<std::pair<std::vector<int>, int>> sorted_;
};

FlipGraph flip_graph(const Region& region, std::size_t limit = kDefaultTilingLimit);

// Signed number of tiles crossing the cut: a tile across a cut edge counts
// +1 when the cell left of the oriented edge is black, -1 when white.
int flow(const Tiling& tiling, const Cut& cut);

using FlowSignature = std::vector<int>;
// Flows across cuts_basis(region), in hole order.
FlowSignature flow_signature(const Tiling& tiling);
FlowSignature flow_signature(const Tiling& tiling, std::span<const Cut> cuts);

// Lozenge counts by orientation, named by the lattice directions spanning
// the lozenge with x ~ (1,0), y ~ (0,1), z ~ (-1,1). Throws RegionError on
// square regions.
struct OrientationCounts {
  int xy = 0;
  int xz = 0;
  int yz = 0;
  friend bool operator==(const OrientationCounts&, const OrientationCounts&) = default;
};
OrientationCounts orientation_counts(const Tiling& tiling);

}  // namespace calisson
