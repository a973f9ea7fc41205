#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "calisson/region.hpp"

namespace calisson {

using BigInt = boost::multiprecision::cpp_int;

// The black x white adjacency matrix with one sign per graph edge. Rows follow
// BipartiteGraph::black, columns BipartiteGraph::white.
struct SignedBipartiteMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;   // row-major, values in {-1, 0, 1}
  std::vector<int> entry_edge;  // graph edge behind each entry, or -1
  std::vector<int> edge_sign;   // per graph edge
  std::vector<int> row_of;      // region cell -> row, or -1
  std::vector<int> col_of;      // region cell -> column, or -1

  int at(int r, int c) const { return entries[std::size_t(r) * cols + c]; }
};

// All-positive matrix (the plain adjacency matrix B).
SignedBipartiteMatrix unsigned_matrix(const BipartiteGraph& g);

// Signs such that every bounded face whose walk has length 4n carries an odd
// number of negative edges and every face of length 4n+2 an even number.
// Faces are fixed leaves-first along a spanning tree of the dual graph rooted
// at the outer face, so faces already satisfied keep all-positive edges.
SignedBipartiteMatrix kasteleyn_sign(const BipartiteGraph& g);

// Number of negative edges on each face that violates the parity rule.
// Empty when the signing is valid.
std::vector<int> parity_violations(const BipartiteGraph& g, std::span<const int> edge_sign);

// Exact determinant by fraction-free elimination. `n` x `n`, row-major.
BigInt determinant(std::span<const int> matrix, int n);

// Tilings counted as |det| of the signed matrix; 0 for unbalanced regions.
BigInt count_tilings(const Region& region);
// |det B| without signs; 0 for unbalanced regions.
BigInt det_unsigned(const Region& region);

// Sign of the permutation black row i -> white column of its mate.
int matching_parity(const SignedBipartiteMatrix& m, std::span<const int> mate);
// Sign of the tiling's monomial in det of the signed matrix.
int monomial_sign(const SignedBipartiteMatrix& m, std::span<const int> mate);

struct SignClasses {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
};
// Tilings split by the parity of their matching permutation.
SignClasses sign_classes(const Region& region);

// Tilings of a rows x cols rectangle from the closed product, evaluated with
// MPFR. `cols` must be even. `precision_bits` = 0 picks 2*rows*cols + 64;
// a smaller explicit value than 2*rows*cols, or a result that is not within
// 1e-6 of an integer, raises PrecisionError.
BigInt rectangle_count(int rows, int cols, long precision_bits = 0);

// Lozenge tilings of hexagon(r, c, m), as an exact rational product.
BigInt hexagon_count(int r, int c, int m);

}  // namespace calisson
