#include "calisson/height.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace calisson {

namespace {

int tile_step(Lattice lattice) { return lattice == Lattice::Square ? 4 : 3; }

// Height change along an edge in its canonical direction when no tile
// crosses it.
int free_delta(Lattice, const Edge& e) { return e.left_black ? 1 : -1; }

int crossed_delta(Lattice lattice, const Edge& e) {
  const int d = free_delta(lattice, e);
  return d - tile_step(lattice) * d;
}

// Largest admissible change walking `e` forwards (or backwards).
int max_step(Lattice lattice, const Edge& e, bool forward) {
  const int a = free_delta(lattice, e);
  if (e.boundary()) return forward ? a : -a;
  const int b = crossed_delta(lattice, e);
  return forward ? std::max(a, b) : std::max(-a, -b);
}

void require_simply_connected(const Region& region) {
  if (!region.simply_connected()) {
    throw RegionError("height functions need a simply connected region (it has " +
                      std::to_string(region.hole_count()) + " holes)");
  }
}

}  // namespace

int HeightFunction::at(Point p) const {
  const int v = region.find_vertex(p);
  if (v < 0) throw RegionError("point is not a vertex of the region");
  return values[v];
}

HeightFunction heights_from_tiling(const Tiling& tiling) {
  const Region& region = tiling.region;
  require_simply_connected(region);
  if (!is_perfect_matching(region, tiling.mate)) throw TilingError("invalid tiling");

  const Lattice lat = region.lattice();
  constexpr int kUnset = std::numeric_limits<int>::min();
  std::vector<int> h(std::size_t(region.vertex_count()), kUnset);
  h[region.base_vertex()] = 0;
  std::deque<int> queue{region.base_vertex()};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const Incidence& in : region.incidences(v)) {
      const Edge& e = region.edges()[in.edge];
      const bool crossed = e.interior() && tiling.mate[e.left] == e.right;
      const int d = crossed ? crossed_delta(lat, e) : free_delta(lat, e);
      const int value = h[v] + (in.forward ? d : -d);
      if (h[in.other] == kUnset) {
        h[in.other] = value;
        queue.push_back(in.other);
      } else if (h[in.other] != value) {
        throw TilingError("tiling does not induce a consistent height function");
      }
    }
  }
  return HeightFunction{region, std::move(h)};
}

bool is_valid_height(const Region& region, std::span<const int> values) {
  if (static_cast<int>(values.size()) != region.vertex_count()) return false;
  if (values[region.base_vertex()] != 0) return false;
  const Lattice lat = region.lattice();
  for (const Edge& e : region.edges()) {
    const int d = values[e.to] - values[e.from];
    if (d == free_delta(lat, e)) continue;
    if (e.interior() && d == crossed_delta(lat, e)) continue;
    return false;
  }
  return true;
}

Tiling tiling_from_heights(const HeightFunction& h) {
  const Region& region = h.region;
  if (!is_valid_height(region, h.values)) throw HeightError("not a height function");
  std::vector<int> mate(std::size_t(region.cell_count()), -1);
  const Lattice lat = region.lattice();
  for (const Edge& e : region.edges()) {
    if (!e.interior() || h.values[e.to] - h.values[e.from] != crossed_delta(lat, e)) continue;
    if (mate[e.left] >= 0 || mate[e.right] >= 0) throw HeightError("a cell lies in two tiles");
    mate[e.left] = e.right;
    mate[e.right] = e.left;
  }
  return make_tiling(region, std::move(mate));
}

std::string_view to_string(UntileableStage stage) {
  switch (stage) {
    case UntileableStage::ColorImbalance: return "color-imbalance";
    case UntileableStage::InteriorContradiction: return "interior-contradiction";
  }
  return "unknown";
}

namespace {

// Fixes heights along the outer boundary, then sweeps inwards in
// breadth-first order keeping at each vertex the extreme value allowed by
// its already-labelled neighbours. A vertex is re-queued whenever its value
// tightens, so the sweep ends at the extremal height function.
ExtremalTiling extremal(const Region& region, bool maximal) {
  require_simply_connected(region);
  const Lattice lat = region.lattice();
  if (!region.balanced()) return {std::nullopt, UntileableStage::ColorImbalance};

  constexpr long kFree = std::numeric_limits<long>::max() / 4;
  const long unset = maximal ? kFree : -kFree;
  std::vector<long> h(std::size_t(region.vertex_count()), unset);
  std::vector<char> fixed(h.size(), 0);

  const auto& outer = region.boundary_cycles().front();
  long value = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const int u = outer[i];
    const int v = outer[(i + 1) % outer.size()];
    if (fixed[u] && h[u] != value) return {std::nullopt, UntileableStage::ColorImbalance};
    h[u] = value;
    fixed[u] = 1;
    const int e = region.edge_between(u, v);
    const int d = free_delta(lat, region.edges()[e]);
    value += region.edges()[e].from == u ? d : -d;
  }
  if (value != 0) return {std::nullopt, UntileableStage::ColorImbalance};

  std::deque<int> queue;
  std::vector<char> queued(h.size(), 0);
  for (int v = 0; v < region.vertex_count(); ++v) {
    if (fixed[v]) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    for (const Incidence& in : region.incidences(u)) {
      const int w = in.other;
      const Edge& e = region.edges()[in.edge];
      // in.forward: u -> w is the canonical direction.
      long bound;
      if (maximal) {
        bound = h[u] + max_step(lat, e, in.forward);
        if (bound >= h[w]) continue;
      } else {
        bound = h[u] - max_step(lat, e, !in.forward);
        if (bound <= h[w]) continue;
      }
      if (fixed[w]) return {std::nullopt, UntileableStage::InteriorContradiction};
      h[w] = bound;
      if (!queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }

  HeightFunction hf{region, std::vector<int>(h.begin(), h.end())};
  if (!is_valid_height(region, hf.values)) {
    return {std::nullopt, UntileableStage::InteriorContradiction};
  }
  return {tiling_from_heights(hf), UntileableStage::ColorImbalance};
}

template <typename Pick>
HeightFunction combine(const HeightFunction& a, const HeightFunction& b, Pick pick) {
  if (!(a.region == b.region)) throw HeightError("height functions on different regions");
  const int base = a.region.base_vertex();
  if (a.values.size() != b.values.size() || a.values[base] != b.values[base]) {
    throw HeightError("height functions use different normalizations");
  }
  HeightFunction out{a.region, a.values};
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = pick(a.values[i], b.values[i]);
  return out;
}

}  // namespace

ExtremalTiling min_tiling(const Region& region) { return extremal(region, false); }
ExtremalTiling max_tiling(const Region& region) { return extremal(region, true); }

HeightFunction meet(const HeightFunction& a, const HeightFunction& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

HeightFunction join(const HeightFunction& a, const HeightFunction& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

std::string serialize_heights(const HeightFunction& h) {
  std::vector<int> order(h.values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  const auto verts = h.region.vertices();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return verts[a].x != verts[b].x ? verts[a].x < verts[b].x : verts[a].y < verts[b].y;
  });
  std::string out;
  for (int v : order) {
    out += std::to_string(verts[v].x) + ' ' + std::to_string(verts[v].y) + ' ' +
           std::to_string(h.values[v]) + '\n';
  }
  return out;
}

}  // namespace calisson
