#include <algorithm>
#include <random>

#include "calisson/counting.hpp"
#include "calisson/tiling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace calisson;

namespace {

int negatives_on(const Face& f, std::span<const int> sign) {
  int n = 0;
  for (int e : f.edges) n += sign[e] < 0 ? 1 : 0;
  return n;
}

std::vector<int> bounded_face_sizes(const BipartiteGraph& g) {
  const FaceSet fs = face_walk(g);
  std::vector<int> sizes;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (int(f) != fs.outer) sizes.push_back(fs.faces[f].size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Cofactor expansion, for small matrices.
long long naive_det(const std::vector<int>& a, int n) {
  if (n == 0) return 1;
  long long total = 0;
  for (int j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    std::vector<int> minor;
    for (int i = 1; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (k != j) minor.push_back(a[std::size_t(i) * n + k]);
      }
    }
    total += (j % 2 ? -1 : 1) * a[j] * naive_det(minor, n - 1);
  }
  return total;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("kasteleyn signs: single faces") {
  const BipartiteGraph sq = adjacency(make_rectangle(2, 2));
  const SignedBipartiteMatrix m = kasteleyn_sign(sq);
  const FaceSet fs = face_walk(sq);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (int(f) != fs.outer) CHECK(negatives_on(fs.faces[f], m.edge_sign) % 2 == 1);
  }
  CHECK(parity_violations(sq, m.edge_sign).empty());
  CHECK(parity_violations(sq, unsigned_matrix(sq).edge_sign).size() == 1);

  const BipartiteGraph hex = adjacency(make_hexagon(1, 1, 1));
  const SignedBipartiteMatrix h = kasteleyn_sign(hex);
  CHECK(std::count(h.edge_sign.begin(), h.edge_sign.end(), -1) == 0);
}

TEST_CASE("kasteleyn signs: faces of sizes 8, 4, 4, 4, 4, 10") {
  const Region r = oracle::square({"#####.", "######", "#.#..#", "######"});
  const BipartiteGraph g = adjacency(r);
  CHECK(bounded_face_sizes(g) == std::vector<int>{4, 4, 4, 4, 8, 10});
  const SignedBipartiteMatrix m = kasteleyn_sign(g);
  CHECK(parity_violations(g, m.edge_sign).empty());
  const FaceSet fs = face_walk(g);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (int(f) == fs.outer) continue;
    const int want = fs.faces[f].size() % 4 == 0 ? 1 : 0;
    CHECK(negatives_on(fs.faces[f], m.edge_sign) % 2 == want);
  }
}

TEST_CASE("kasteleyn signs: triangulated regions stay positive") {
  for (const Region& r : {make_hexagon(2, 2, 2), make_hexagon(3, 1, 2), make_triangle(4)}) {
    const SignedBipartiteMatrix m = kasteleyn_sign(adjacency(r));
    CHECK(std::count(m.edge_sign.begin(), m.edge_sign.end(), -1) == 0);
  }
}

TEST_CASE("signed matrix structure") {
  const Region r = make_rectangle(3, 4);
  const BipartiteGraph g = adjacency(r);
  const SignedBipartiteMatrix m = kasteleyn_sign(g);
  CHECK(m.rows == 6);
  CHECK(m.cols == 6);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      const int b = g.black[i];
      const int w = g.white[j];
      const bool adjacent = r.shared_edge(b, w) >= 0;
      CHECK((std::abs(m.at(i, j)) == 1) == adjacent);
      const int e = m.entry_edge[std::size_t(i) * m.cols + j];
      CHECK((e >= 0) == adjacent);
      if (e >= 0) CHECK(m.at(i, j) == m.edge_sign[e]);
    }
  }
  // Rows follow the lexicographic (y, x) order of black cells.
  for (std::size_t i = 1; i < g.black.size(); ++i) {
    CHECK(r.cells()[g.black[i - 1]] < r.cells()[g.black[i]]);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(std::vector<int>{}, 0) == 1);
  CHECK(determinant(std::vector<int>{0, 1, 1, 0}, 2) == -1);
  CHECK(determinant(std::vector<int>{2, 0, 0, 0, 3, 0, 0, 0, 4}, 3) == 24);
  CHECK(determinant(std::vector<int>{1, 2, 2, 4}, 2) == 0);
  CHECK(determinant(std::vector<int>{0, 0, 1, 1}, 2) == 0);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<int> a(std::size_t(n) * n);
    for (int& v : a) v = entry(rng);
    REQUIRE(determinant(a, n) == naive_det(a, n));
  }
  // Past the 64-bit path: Hadamard's matrix of order 32 has determinant 32^16.
  const int n = 32;
  std::vector<int> h(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[std::size_t(i) * n + j] = __builtin_popcount(unsigned(i & j)) % 2 ? -1 : 1;
  }
  const BigInt d = determinant(h, n);
  CHECK((d < 0 ? BigInt(-d) : d) == boost::multiprecision::pow(BigInt(32), 16));
}

TEST_CASE("count_tilings") {
  CHECK(count_tilings(make_rectangle(2, 2)) == 2);
  CHECK(count_tilings(make_rectangle(8, 8)) == 12988816);
  CHECK(count_tilings(make_hexagon(2, 2, 2)) == 20);
  CHECK(count_tilings(make_hexagon(3, 3, 3)) == 980);
  CHECK(count_tilings(oracle::square({"#.", "##"})) == 0);
  CHECK(count_tilings(oracle::pendant_trap()) == 0);
  CHECK(count_tilings(oracle::ring()) == 2);
  for (int rows = 1; rows <= 6; ++rows) {
    for (int cols = 1; cols <= 6; ++cols) {
      CHECK(count_tilings(make_rectangle(rows, cols)) == oracle::rectangle_transfer(rows, cols));
    }
  }
}

TEST_CASE("count_tilings agrees with the matching oracle") {
  for (Lattice lat : {Lattice::Square, Lattice::Triangle}) {
    for (const auto& cells : oracle::fixed_animals(lat, lat == Lattice::Square ? 8 : 10)) {
      REQUIRE(count_tilings(oracle::region_of(lat, cells)) ==
              oracle::count_matchings(lat, cells));
    }
  }
  for (int seed = 0; seed < 60; ++seed) {
    const Lattice lat = seed % 2 ? Lattice::Square : Lattice::Triangle;
    const Region r = make_random(lat, 16 + 2 * (seed % 6), std::uint64_t(seed));
    const std::vector<Cell> cells(r.cells().begin(), r.cells().end());
    REQUIRE(count_tilings(r) == oracle::count_matchings(lat, cells));
  }
}

TEST_CASE("every monomial of the signed matrix has one sign") {
  for (const Region& r : {make_rectangle(4, 4), oracle::ring(), make_hexagon(2, 2, 2),
                          oracle::square({"######", "#.##.#", "######"})}) {
    const SignedBipartiteMatrix m = kasteleyn_sign(adjacency(r));
    int first = 0;
    for_each_tiling(r, [&](std::span<const int> mate) {
      const int s = monomial_sign(m, mate);
      if (first == 0) first = s;
      CHECK(s == first);
      return true;
    });
    CHECK(first != 0);
  }
}

TEST_CASE("det_unsigned and sign classes") {
  CHECK(det_unsigned(make_rectangle(2, 2)) == 0);
  const SignClasses sq = sign_classes(make_rectangle(2, 2));
  CHECK(sq.plus == 1);
  CHECK(sq.minus == 1);

  const SignClasses hex = sign_classes(make_hexagon(1, 1, 1));
  CHECK(hex.plus + hex.minus == 2);
  CHECK(std::min(hex.plus, hex.minus) == 0);
  CHECK(det_unsigned(make_hexagon(1, 1, 1)) == 2);

  const SignClasses r23 = sign_classes(make_rectangle(2, 3));
  CHECK(r23.plus + r23.minus == 3);
  const long diff = long(r23.plus) - long(r23.minus);
  CHECK(std::abs(diff) <= 1);
  CHECK(det_unsigned(make_rectangle(2, 3)) == std::abs(diff));

  for (Lattice lat : {Lattice::Square, Lattice::Triangle}) {
    for (const auto& cells : oracle::fixed_animals(lat, lat == Lattice::Square ? 8 : 10)) {
      if (oracle::hole_count(lat, cells) != 0) continue;
      const Region r = oracle::region_of(lat, cells);
      const BigInt d = det_unsigned(r);
      const SignClasses c = sign_classes(r);
      const long gap = std::abs(long(c.plus) - long(c.minus));
      REQUIRE(d == gap);
      if (lat == Lattice::Square) {
        REQUIRE(d <= 1);
      } else {
        REQUIRE(d == count_tilings(r));
      }
    }
  }
}

TEST_CASE("flips change monomial parity on squares only") {
  for (const Region& r : {make_rectangle(4, 4), make_hexagon(2, 2, 2)}) {
    const SignedBipartiteMatrix m = unsigned_matrix(adjacency(r));
    const int want = r.lattice() == Lattice::Square ? -1 : 1;
    for (const Tiling& t : enumerate_tilings(r)) {
      for (const Flip& f : available_flips(t)) {
        CHECK(matching_parity(m, t.mate) * matching_parity(m, apply_flip(t, f).mate) == want);
      }
    }
  }
}

TEST_CASE("rectangle_count") {
  CHECK(rectangle_count(1, 2) == 1);
  CHECK(rectangle_count(2, 2) == 2);
  CHECK(rectangle_count(8, 8) == 12988816);
  for (int rows = 1; rows <= 6; ++rows) {
    for (int cols = 2; cols <= 6; cols += 2) {
      CHECK(rectangle_count(rows, cols) == oracle::rectangle_transfer(rows, cols));
    }
  }
  CHECK_THROWS_AS(rectangle_count(2, 3), Error);
  CHECK_THROWS_AS(rectangle_count(0, 2), Error);
  CHECK_THROWS_AS(rectangle_count(8, 8, 100), PrecisionError);
  CHECK(rectangle_count(8, 8, 128) == 12988816);
}

TEST_CASE("hexagon_count") {
  CHECK(hexagon_count(1, 1, 1) == 2);
  CHECK(hexagon_count(2, 2, 2) == 20);
  CHECK(hexagon_count(3, 3, 3) == 980);
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      for (int m = 1; m <= 3; ++m) {
        CHECK(hexagon_count(r, c, m) == count_tilings(make_hexagon(r, c, m)));
        CHECK(hexagon_count(r, c, m) == hexagon_count(c, m, r));
      }
    }
  }
  CHECK_THROWS_AS(hexagon_count(0, 1, 1), Error);
}

}  // TEST_SUITE
