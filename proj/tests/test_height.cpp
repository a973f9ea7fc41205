#include <map>
#include <random>

#include "calisson/height.hpp"
#include "calisson/plane_partition.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace calisson;

namespace {

Tiling dominoes(const Region& r, std::vector<std::pair<Cell, Cell>> tiles) {
  return make_tiling(r, std::span<const std::pair<Cell, Cell>>(tiles));
}

bool pointwise_le(const HeightFunction& a, const HeightFunction& b) {
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] > b.values[i]) return false;
  }
  return true;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<Region> small_simply_connected(Lattice lat, int max_cells) {
  std::vector<Region> out;
  for (const auto& cells : oracle::fixed_animals(lat, max_cells)) {
    if (oracle::hole_count(lat, cells) == 0) out.push_back(oracle::region_of(lat, cells));
  }
  return out;
}

}  // namespace

TEST_SUITE("height") {

TEST_CASE("1x2: boundary rule alone") {
  const Region r = make_rectangle(1, 2);
  const HeightFunction h = heights_from_tiling(dominoes(r, {{Cell{0, 0}, Cell{1, 0}}}));
  REQUIRE(h.values.size() == 6);
  // Walk counterclockwise from the base: +1 when the cell on the left is black.
  CHECK(h.at({0, 0}) == 0);
  CHECK(h.at({1, 0}) == 1);
  CHECK(h.at({2, 0}) == 0);
  CHECK(h.at({2, 1}) == -1);
  CHECK(h.at({1, 1}) == -2);
  CHECK(h.at({0, 1}) == -1);
}

TEST_CASE("2x2: the two tilings differ by 4 at the centre only") {
  const Region r = make_rectangle(2, 2);
  const Tiling horizontal = dominoes(r, {{Cell{0, 0}, Cell{1, 0}}, {Cell{0, 1}, Cell{1, 1}}});
  const Tiling vertical = dominoes(r, {{Cell{0, 0}, Cell{0, 1}}, {Cell{1, 0}, Cell{1, 1}}});
  const HeightFunction a = heights_from_tiling(horizontal);
  const HeightFunction b = heights_from_tiling(vertical);
  for (int v = 0; v < r.vertex_count(); ++v) {
    if (r.vertices()[v] == Point{1, 1}) continue;
    CHECK(a.values[v] == b.values[v]);
  }
  CHECK(a.at({1, 1}) == -2);
  CHECK(b.at({1, 1}) == 2);
  CHECK(b.at({1, 1}) - a.at({1, 1}) == 4);
}

TEST_CASE("unit hexagon: the two tilings differ by 3 at the centre") {
  const Region r = make_hexagon(1, 1, 1);
  const auto all = enumerate_tilings(r);
  REQUIRE(all.size() == 2);
  const HeightFunction a = heights_from_tiling(all[0]);
  const HeightFunction b = heights_from_tiling(all[1]);
  const Point centre{1, 1};
  CHECK(std::abs(a.at(centre) - b.at(centre)) == 3);
  for (int v = 0; v < r.vertex_count(); ++v) {
    if (r.vertices()[v] != centre) CHECK(a.values[v] == b.values[v]);
  }
}

TEST_CASE("mod classes") {
  // Dominoes with the base at the origin: 0, 1, 2, 3 for (even, even),
  // (odd, even), (odd, odd), (even, odd).
  const Region r = make_rectangle(4, 5);
  const std::map<std::pair<int, int>, int> table = {{{0, 0}, 0}, {{1, 0}, 1}, {{1, 1}, 2}, {{0, 1}, 3}};
  for (const Tiling& t : enumerate_tilings(r)) {
    const HeightFunction h = heights_from_tiling(t);
    for (int v = 0; v < r.vertex_count(); ++v) {
      const Point p = r.vertices()[v];
      REQUIRE(mod(h.values[v], 4) == table.at({p.x % 2, p.y % 2}));
    }
  }
  // Lozenges: (x - y) mod 3 relative to the base.
  const Region hex = make_hexagon(2, 3, 2);
  const Point base = hex.vertices()[hex.base_vertex()];
  for (const Tiling& t : enumerate_tilings(hex)) {
    const HeightFunction h = heights_from_tiling(t);
    for (int v = 0; v < hex.vertex_count(); ++v) {
      const Point p = hex.vertices()[v];
      REQUIRE(mod(h.values[v], 3) == mod((p.x - p.y) - (base.x - base.y), 3));
    }
  }
}

TEST_CASE("tiling_from_heights") {
  const Region r = make_rectangle(2, 2);
  const ExtremalTiling low = min_tiling(r);
  REQUIRE(low);
  // The minimal tiling is the horizontal one: its centre height is -2 < 2.
  const Tiling horizontal = dominoes(r, {{Cell{0, 0}, Cell{1, 0}}, {Cell{0, 1}, Cell{1, 1}}});
  CHECK(*low.tiling == horizontal);
  CHECK(tiling_from_heights(heights_from_tiling(horizontal)) == horizontal);

  const auto strip = enumerate_tilings(make_rectangle(2, 6));
  CHECK(strip.size() == oracle::fibonacci(7));
  for (const Tiling& t : strip) {
    const HeightFunction h = heights_from_tiling(t);
    CHECK(tiling_from_heights(h) == t);
    CHECK(heights_from_tiling(tiling_from_heights(h)) == h);
  }
  for (const Tiling& t : enumerate_tilings(make_hexagon(1, 1, 1))) {
    CHECK(tiling_from_heights(heights_from_tiling(t)) == t);
  }

  HeightFunction bad = heights_from_tiling(horizontal);
  bad.values[r.find_vertex({1, 1})] = 0;
  CHECK_THROWS_AS(tiling_from_heights(bad), HeightError);
}

TEST_CASE("is_valid_height") {
  const Region r = make_rectangle(2, 2);
  const HeightFunction h = heights_from_tiling(*min_tiling(r).tiling);
  CHECK(is_valid_height(r, h.values));
  std::vector<int> bumped = h.values;
  bumped[r.find_vertex({1, 1})] += 1;
  CHECK_FALSE(is_valid_height(r, bumped));
  CHECK_FALSE(is_valid_height(r, std::vector<int>(std::size_t(r.vertex_count()), 0)));
  CHECK_FALSE(is_valid_height(r, std::vector<int>(3, 0)));

  const Region hex = make_hexagon(2, 2, 2);
  for (const Tiling& t : enumerate_tilings(hex)) {
    std::vector<int> v = heights_from_tiling(t).values;
    REQUIRE(is_valid_height(hex, v));
    v[hex.find_vertex({2, 2})] += 1;
    CHECK_FALSE(is_valid_height(hex, v));
  }
}

TEST_CASE("heights need simple connectivity and a valid tiling") {
  const Region ring = oracle::ring();
  const auto tilings = enumerate_tilings(ring);
  REQUIRE(tilings.size() == 2);
  CHECK_THROWS_AS(heights_from_tiling(tilings[0]), RegionError);
  CHECK_THROWS_AS(min_tiling(ring), RegionError);
  Tiling broken = enumerate_tilings(make_rectangle(2, 2))[0];
  broken.mate[0] = 0;
  CHECK_THROWS_AS(heights_from_tiling(broken), TilingError);
}

TEST_CASE("min_tiling and max_tiling") {
  const Region sq = make_rectangle(2, 2);
  const ExtremalTiling low = min_tiling(sq);
  const ExtremalTiling high = max_tiling(sq);
  REQUIRE(low);
  REQUIRE(high);
  CHECK_FALSE(*low.tiling == *high.tiling);
  CHECK(pointwise_le(heights_from_tiling(*low.tiling), heights_from_tiling(*high.tiling)));

  const Region trap = oracle::pendant_trap();
  CHECK(trap.black_count() == 3);
  CHECK(trap.white_count() == 3);
  const std::vector<Cell> trap_cells(trap.cells().begin(), trap.cells().end());
  CHECK_FALSE(oracle::has_matching(Lattice::Square, trap_cells));
  const ExtremalTiling none = min_tiling(trap);
  CHECK_FALSE(none);
  CHECK(none.stage == UntileableStage::InteriorContradiction);
  const ExtremalTiling none_max = max_tiling(trap);
  CHECK_FALSE(none_max);
  CHECK(none_max.stage == UntileableStage::InteriorContradiction);

  const Region ell = oracle::square({"#.", "##"});
  CHECK(min_tiling(ell).stage == UntileableStage::ColorImbalance);
  CHECK(to_string(UntileableStage::ColorImbalance) == "color-imbalance");
  CHECK(to_string(UntileableStage::InteriorContradiction) == "interior-contradiction");

  const Region five = make_hexagon(5, 5, 5);
  const ExtremalTiling empty = min_tiling(five);
  REQUIRE(empty);
  const PlanePartition p = tiling_to_partition(*empty.tiling);
  CHECK(p.volume() == 0);

  const ExtremalTiling full = max_tiling(make_hexagon(2, 2, 2));
  REQUIRE(full);
  const PlanePartition q = tiling_to_partition(*full.tiling);
  for (int v : q.entries) CHECK(v == 2);
}

TEST_CASE("meet and join") {
  const Region sq = make_rectangle(2, 4);
  const auto all = enumerate_tilings(sq);
  REQUIRE(all.size() == 5);
  HeightFunction folded = heights_from_tiling(all[0]);
  CHECK(meet(folded, folded) == folded);
  for (const Tiling& t : all) folded = meet(folded, heights_from_tiling(t));
  CHECK(folded == heights_from_tiling(*min_tiling(sq).tiling));

  const Region hex = make_hexagon(2, 2, 2);
  const HeightFunction lo = heights_from_tiling(*min_tiling(hex).tiling);
  const HeightFunction hi = heights_from_tiling(*max_tiling(hex).tiling);
  CHECK(join(lo, hi) == hi);
  CHECK(meet(lo, hi) == lo);

  CHECK_THROWS_AS(meet(lo, heights_from_tiling(all[0])), HeightError);
  HeightFunction shifted = lo;
  for (int& v : shifted.values) v += 3;
  CHECK_THROWS_AS(join(lo, shifted), HeightError);
}

TEST_CASE("property: bijection, minimality, boundary agreement, lattice laws") {
  std::mt19937_64 rng(0);
  int regions = 0;
  for (Lattice lat : {Lattice::Square, Lattice::Triangle}) {
    for (const Region& r : small_simply_connected(lat, lat == Lattice::Square ? 8 : 10)) {
      const auto all = enumerate_tilings(r);
      const ExtremalTiling low = min_tiling(r);
      const ExtremalTiling high = max_tiling(r);
      const std::vector<Cell> cells(r.cells().begin(), r.cells().end());
      REQUIRE(bool(low) == oracle::has_matching(lat, cells));
      REQUIRE(bool(high) == bool(low));
      if (!low) continue;
      ++regions;
      const HeightFunction hl = heights_from_tiling(*low.tiling);
      const HeightFunction hh = heights_from_tiling(*high.tiling);
      std::vector<HeightFunction> hs;
      for (const Tiling& t : all) {
        const HeightFunction h = heights_from_tiling(t);
        REQUIRE(tiling_from_heights(h) == t);
        REQUIRE(pointwise_le(hl, h));
        REQUIRE(pointwise_le(h, hh));
        for (int v = 0; v < r.vertex_count(); ++v) {
          if (r.on_boundary(v)) REQUIRE(h.values[v] == hl.values[v]);
        }
        hs.push_back(h);
      }
      std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
      for (int k = 0; k < 3; ++k) {
        const HeightFunction& a = hs[pick(rng)];
        const HeightFunction& b = hs[pick(rng)];
        const HeightFunction& c = hs[pick(rng)];
        REQUIRE(is_valid_height(r, meet(a, b).values));
        REQUIRE(is_valid_height(r, join(a, b).values));
        REQUIRE(meet(a, join(a, b)) == a);
        REQUIRE(join(a, meet(a, b)) == a);
        REQUIRE(meet(a, b) == meet(b, a));
        REQUIRE(meet(a, meet(b, c)) == meet(meet(a, b), c));
        REQUIRE(join(a, join(b, c)) == join(join(a, b), c));
      }
    }
  }
  CHECK(regions > 100);
}

TEST_CASE("serialize_heights") {
  const Region r = make_rectangle(1, 2);
  const HeightFunction h = heights_from_tiling(*min_tiling(r).tiling);
  CHECK(serialize_heights(h) == "0 0 0\n0 1 -1\n1 0 1\n1 1 -2\n2 0 0\n2 1 -1\n");
}

}  // TEST_SUITE
