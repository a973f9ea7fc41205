#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "calisson/counting.hpp"
#include "calisson/tiling.hpp"

namespace calisson {

// An r x c array of cube column heights n_ij (row i along x, column j along
// y), weakly decreasing along rows and columns, with parts at most `bound`.
struct PlanePartition {
  int rows = 0;
  int cols = 0;
  int bound = 0;
  std::vector<int> entries;  // row-major

  int at(int i, int j) const { return entries[std::size_t(i) * cols + j]; }
  long volume() const;
  bool valid() const;
  // Throws Error describing the first violated condition.
  void validate() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
};

// Whitespace-separated rows. `bound` < 0 takes the largest entry (at least 1).
PlanePartition parse_partition(std::string_view text, int bound = -1);
std::string serialize_partition(const PlanePartition& p);

// Reads the pile of cubes off a lozenge tiling of hexagon(r, c, m) (up to
// translation). The empty pile is the minimal tiling. Throws RegionError when
// the region is not such a hexagon.
PlanePartition tiling_to_partition(const Tiling& tiling);
// Tiling of make_hexagon(r, c, m) showing the pile. Throws Error for an
// invalid partition or one that does not fit the box.
Tiling partition_to_tiling(const PlanePartition& p, int r, int c, int m);

// Coefficients of prod_{i<=r, j<=m} (1 - x^(c+i+j-1)) / (1 - x^(i+j-1)),
// degree r*c*m: the number of boxed plane partitions of each volume.
std::vector<BigInt> macmahon_series(int r, int c, int m);
// The same numbers by exhaustive generation.
std::vector<std::uint64_t> enumerate_partitions(int r, int c, int m);

}  // namespace calisson
