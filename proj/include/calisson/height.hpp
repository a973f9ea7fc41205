#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "calisson/region.hpp"
#include "calisson/tiling.hpp"

namespace calisson {

// Integer heights on the vertices of a simply connected region, indexed like
// Region::vertices(). The base vertex (smallest in (y, x)) has height 0.
//
// Walking an edge not crossed by a tile changes the height by +1 when the
// lattice cell on the left is black and -1 when it is white. Walking an edge
// crossed by a tile changes it by -3 / +3 (dominoes) or -2 / +2 (lozenges)
// instead. Lozenge heights are then (x - y) mod 3 up to the base offset, and
// domino heights follow the (x mod 2, y mod 2) table 0, 1, 2, 3 for
// (even, even), (odd, even), (odd, odd), (even, odd) when the base vertex has
// both coordinates even.
struct HeightFunction {
  Region region;
  std::vector<int> values;

  int at(Point p) const;
  friend bool operator==(const HeightFunction& a, const HeightFunction& b) {
    return a.values == b.values && a.region == b.region;
  }
};

// Throws RegionError when the region has holes and TilingError when the
// tiling is invalid.
HeightFunction heights_from_tiling(const Tiling& tiling);
// Throws HeightError when `h` is not a height function.
Tiling tiling_from_heights(const HeightFunction& h);
bool is_valid_height(const Region& region, std::span<const int> values);

enum class UntileableStage {
  ColorImbalance,         // the boundary walk does not close up
  InteriorContradiction,  // the inward sweep forces a boundary vertex too high
};
std::string_view to_string(UntileableStage stage);

struct ExtremalTiling {
  std::optional<Tiling> tiling;
  UntileableStage stage = UntileableStage::ColorImbalance;  // when !tiling
  explicit operator bool() const { return tiling.has_value(); }
};

// The tiling with the pointwise smallest (largest) height function, or the
// stage at which the sweep proved the region untileable. Throws RegionError
// when the region has holes.
ExtremalTiling min_tiling(const Region& region);
ExtremalTiling max_tiling(const Region& region);

// Pointwise minimum / maximum. Throws HeightError for different regions or
// different base values.
HeightFunction meet(const HeightFunction& a, const HeightFunction& b);
HeightFunction join(const HeightFunction& a, const HeightFunction& b);

// One `x y h` line per vertex, ordered by x then y.
std::string serialize_heights(const HeightFunction& h);

}  // namespace calisson
