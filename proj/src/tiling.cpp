#include "calisson/tiling.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "calisson/height.hpp"

namespace calisson {

std::vector<std::pair<int, int>> Tiling::tiles() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < mate.size(); ++i) {
    if (int(i) < mate[i]) out.emplace_back(int(i), mate[i]);
  }
  return out;
}

bool is_perfect_matching(const Region& region, std::span<const int> mate) {
  if (static_cast<int>(mate.size()) != region.cell_count()) return false;
  for (int i = 0; i < region.cell_count(); ++i) {
    const int j = mate[i];
    if (j < 0 || j >= region.cell_count() || j == i || mate[j] != i) return false;
    const auto nb = region.neighbors(i);
    if (std::find(nb.begin(), nb.end(), j) == nb.end()) return false;
  }
  return true;
}

Tiling make_tiling(const Region& region, std::vector<int> mate) {
  if (!is_perfect_matching(region, mate)) {
    throw TilingError("cells are not perfectly matched by adjacent pairs");
  }
  return Tiling{region, std::move(mate)};
}

Tiling make_tiling(const Region& region, std::span<const std::pair<Cell, Cell>> tiles) {
  std::vector<int> mate(std::size_t(region.cell_count()), -1);
  for (const auto& [a, b] : tiles) {
    const int i = region.find(a);
    const int j = region.find(b);
    if (i < 0 || j < 0) throw TilingError("tile covers a cell outside the region");
    if (mate[i] >= 0 || mate[j] >= 0) throw TilingError("tiles overlap");
    mate[i] = j;
    mate[j] = i;
  }
  return make_tiling(region, std::move(mate));
}

Tiling parse_tiling(const Region& region, std::string_view text) {
  const bool tri = region.lattice() == Lattice::Triangle;
  std::vector<std::pair<Cell, Cell>> tiles;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto read_cell = [&](std::istringstream& ls, Cell& c) {
    if (!(ls >> c.x >> c.y)) return false;
    if (tri) {
      std::string o;
      if (!(ls >> o) || (o != "u" && o != "d")) return false;
      c.down = o == "d";
    }
    return true;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Cell a, b;
    std::string rest;
    if (!read_cell(ls, a) || !read_cell(ls, b) || (ls >> rest)) {
      throw ParseError("tiling line " + std::to_string(lineno) + ": expected " +
                       (tri ? "`x1 y1 o1 x2 y2 o2`" : "`x1 y1 x2 y2`"));
    }
    tiles.emplace_back(a, b);
  }
  return make_tiling(region, tiles);
}

std::string serialize_tiling(const Tiling& tiling) {
  const bool tri = tiling.region.lattice() == Lattice::Triangle;
  std::string out;
  auto put = [&](const Cell& c) {
    out += std::to_string(c.x);
    out += ' ';
    out += std::to_string(c.y);
    if (tri) out += c.down ? " d" : " u";
  };
  for (const auto& [a, b] : tiling.tiles()) {
    put(tiling.region.cells()[a]);
    out += ' ';
    put(tiling.region.cells()[b]);
    out += '\n';
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Region& region, const std::function<bool(std::span<const int>)>& visit)
      : region_(region), visit_(visit) {
    const int n = region.cell_count();
    mate_.assign(std::size_t(n), -1);
    free_.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) {
      free_[i] = static_cast<int>(region.neighbors(i).size());
      if (free_[i] <= 1) forced_.push_back(i);
    }
  }

  void run() {
    if (!region_.balanced()) return;
    search(0);
  }

 private:
  void place(int a, int b) {
    mate_[a] = b;
    mate_[b] = a;
    trail_.emplace_back(a, b);
    for (int c : {a, b}) {
      for (int u : region_.neighbors(c)) {
        if (mate_[u] < 0 && --free_[u] <= 1) forced_.push_back(u);
      }
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [a, b] = trail_.back();
      trail_.pop_back();
      mate_[a] = -1;
      mate_[b] = -1;
      for (int c : {a, b}) {
        for (int u : region_.neighbors(c)) {
          if (mate_[u] < 0 && u != a && u != b) ++free_[u];
        }
      }
    }
  }

  bool propagate() {
    while (!forced_.empty()) {
      const int u = forced_.back();
      forced_.pop_back();
      if (mate_[u] >= 0) continue;
      if (free_[u] == 0) return false;
      if (free_[u] == 1) {
        for (int v : region_.neighbors(u)) {
          if (mate_[v] < 0) {
            place(u, v);
            break;
          }
        }
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool search(int cursor) {
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      forced_.clear();
      undo_to(mark);
      return true;
    }
    const int n = region_.cell_count();
    while (cursor < n && mate_[cursor] >= 0) ++cursor;
    bool keep_going = true;
    if (cursor == n) {
      keep_going = visit_(mate_);
    } else {
      for (int v : region_.neighbors(cursor)) {
        if (mate_[v] >= 0) continue;
        const std::size_t inner = trail_.size();
        place(cursor, v);
        keep_going = search(cursor + 1);
        forced_.clear();
        undo_to(inner);
        if (!keep_going) break;
      }
    }
    undo_to(mark);
    return keep_going;
  }

  const Region& region_;
  const std::function<bool(std::span<const int>)>& visit_;
  std::vector<int> mate_;
  std::vector<int> free_;
  std::vector<int> forced_;
  std::vector<std::pair<int, int>> trail_;
};

// Cells around a flip location in cyclic order, or empty when the square or
// hexagon is not entirely inside the region.
std::vector<int> flip_cycle(const Region& region, const Flip& f) {
  std::vector<Cell> cells;
  if (region.lattice() == Lattice::Square) {
    cells = {{f.x, f.y}, {f.x + 1, f.y}, {f.x + 1, f.y + 1}, {f.x, f.y + 1}};
  } else {
    cells = {{f.x, f.y, false},         {f.x - 1, f.y, true},     {f.x - 1, f.y, false},
             {f.x - 1, f.y - 1, true}, {f.x, f.y - 1, false}, {f.x, f.y - 1, true}};
  }
  std::vector<int> out;
  for (const Cell& c : cells) {
    const int i = region.find(c);
    if (i < 0) return {};
    out.push_back(i);
  }
  return out;
}

// 0: paired as (0,1),(2,3),...; 1: paired as (1,2),...,(k-1,0); -1: neither.
int cycle_phase(std::span<const int> mate, std::span<const int> cyc) {
  const std::size_t k = cyc.size();
  for (int phase = 0; phase < 2; ++phase) {
    bool ok = true;
    for (std::size_t i = phase; i < k + phase && ok; i += 2) {
      ok = mate[cyc[i % k]] == cyc[(i + 1) % k];
    }
    if (ok) return phase;
  }
  return -1;
}

std::vector<Flip> candidate_locations(const Region& region) {
  std::vector<Flip> out;
  if (region.lattice() == Lattice::Square) {
    for (const Cell& c : region.cells()) out.push_back({c.x, c.y});
  } else {
    for (int v = 0; v < region.vertex_count(); ++v) {
      if (!region.on_boundary(v)) out.push_back({region.vertices()[v].x, region.vertices()[v].y});
    }
  }
  return out;
}

}  // namespace

void for_each_tiling(const Region& region,
                     const std::function<bool(std::span<const int> mate)>& visit) {
  Enumerator(region, visit).run();
}

std::uint64_t count_by_enumeration(const Region& region) {
  std::uint64_t n = 0;
  for_each_tiling(region, [&](std::span<const int>) {
    ++n;
    return true;
  });
  return n;
}

std::vector<Tiling> enumerate_tilings(const Region& region, std::size_t limit) {
  std::vector<Tiling> out;
  bool exceeded = false;
  for_each_tiling(region, [&](std::span<const int> mate) {
    if (out.size() == limit) {
      exceeded = true;
      return false;
    }
    out.push_back(Tiling{region, std::vector<int>(mate.begin(), mate.end())});
    return true;
  });
  if (exceeded) {
    throw LimitExceeded("region has more than " + std::to_string(limit) + " tilings");
  }
  return out;
}

std::optional<Tiling> find_tiling(const Region& region) {
  if (!region.balanced()) return std::nullopt;
  const int n = region.cell_count();
  std::vector<int> mate(std::size_t(n), -1);
  std::vector<int> seen(std::size_t(n), -1);
  // Kuhn's augmenting paths from each black cell.
  std::function<bool(int, int)> augment = [&](int b, int stamp) {
    for (int w : region.neighbors(b)) {
      if (seen[w] == stamp) continue;
      seen[w] = stamp;
      if (mate[w] < 0 || augment(mate[w], stamp)) {
        mate[w] = b;
        mate[b] = w;
        return true;
      }
    }
    return false;
  };
  for (int b = 0; b < n; ++b) {
    if (region.color(b) != Color::Black) continue;
    if (!augment(b, b)) return std::nullopt;
  }
  return Tiling{region, std::move(mate)};
}

std::vector<Flip> available_flips(const Tiling& tiling) {
  std::vector<Flip> out;
  for (const Flip& f : candidate_locations(tiling.region)) {
    const auto cyc = flip_cycle(tiling.region, f);
    if (!cyc.empty() && cycle_phase(tiling.mate, cyc) >= 0) out.push_back(f);
  }
  return out;
}

Tiling apply_flip(const Tiling& tiling, const Flip& flip) {
  const auto cyc = flip_cycle(tiling.region, flip);
  const int phase = cyc.empty() ? -1 : cycle_phase(tiling.mate, cyc);
  if (phase < 0) {
    throw TilingError("no flip available at (" + std::to_string(flip.x) + ", " +
                      std::to_string(flip.y) + ")");
  }
  Tiling out = tiling;
  const std::size_t k = cyc.size();
  for (std::size_t i = 1 - phase; i < k + 1 - phase; i += 2) {
    out.mate[cyc[i % k]] = cyc[(i + 1) % k];
    out.mate[cyc[(i + 1) % k]] = cyc[i % k];
  }
  return out;
}

int distance(const Tiling& a, const Tiling& b) {
  if (!(a.region == b.region)) throw RegionError("tilings belong to different regions");
  if (!a.region.simply_connected()) {
    throw RegionError("the distance formula needs a simply connected region");
  }
  const HeightFunction ha = heights_from_tiling(a);
  const HeightFunction hb = heights_from_tiling(b);
  long total = 0;
  for (std::size_t v = 0; v < ha.values.size(); ++v) total += std::abs(ha.values[v] - hb.values[v]);
  const int scale = a.region.lattice() == Lattice::Square ? 4 : 3;
  return static_cast<int>(total / scale);
}

std::optional<int> bfs_distance(const Tiling& a, const Tiling& b, std::size_t limit) {
  if (!(a.region == b.region)) throw RegionError("tilings belong to different regions");
  std::set<std::vector<int>> seen{a.mate};
  std::deque<std::pair<Tiling, int>> queue;
  queue.emplace_back(a, 0);
  while (!queue.empty()) {
    auto [t, d] = std::move(queue.front());
    queue.pop_front();
    if (t.mate == b.mate) return d;
    for (const Flip& f : available_flips(t)) {
      Tiling next = apply_flip(t, f);
      if (!seen.insert(next.mate).second) continue;
      if (seen.size() > limit) {
        throw LimitExceeded("breadth-first search visited more than " + std::to_string(limit) +
                            " tilings");
      }
      queue.emplace_back(std::move(next), d + 1);
    }
  }
  return std::nullopt;
}

std::vector<int> FlipGraph::component_sizes() const {
  std::vector<int> sizes(std::size_t(component_count), 0);
  for (int c : component) ++sizes[c];
  return sizes;
}

std::vector<int> FlipGraph::distances_from(int source) const {
  std::vector<int> dist(tilings.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adjacent[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int FlipGraph::index_of(const Tiling& tiling) const {
  const auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), tiling.mate,
      [](const std::pair<std::vector<int>, int>& e, const std::vector<int>& m) { return e.first < m; });
  if (it == sorted_.end() || it->first != tiling.mate) return -1;
  return it->second;
}

std::size_t FlipGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& a : adjacent) n += a.size();
  return n / 2;
}

FlipGraph flip_graph(const Region& region, std::size_t limit) {
  FlipGraph g;
  g.tilings = enumerate_tilings(region, limit);
  const std::size_t n = g.tilings.size();
  g.sorted_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.sorted_.emplace_back(g.tilings[i].mate, int(i));
  std::sort(g.sorted_.begin(), g.sorted_.end());

  g.adjacent.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Flip& f : available_flips(g.tilings[i])) {
      const int j = g.index_of(apply_flip(g.tilings[i], f));
      if (j < 0) throw std::logic_error("flip produced a tiling missing from the enumeration");
      g.adjacent[i].push_back(j);
    }
    std::sort(g.adjacent[i].begin(), g.adjacent[i].end());
  }

  g.component.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (g.component[s] >= 0) continue;
    const int id = g.component_count++;
    std::deque<int> queue{int(s)};
    g.component[s] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.adjacent[u]) {
        if (g.component[w] < 0) {
          g.component[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return g;
}

int flow(const Tiling& tiling, const Cut& cut) {
  const Region& region = tiling.region;
  int total = 0;
  for (std::size_t i = 0; i + 1 < cut.path.size(); ++i) {
    const int u = region.find_vertex(cut.path[i]);
    const int v = region.find_vertex(cut.path[i + 1]);
    const int e = (u < 0 || v < 0) ? -1 : region.edge_between(u, v);
    if (e < 0 || !region.edges()[e].interior()) {
      throw RegionError("cut does not run along interior edges of the region");
    }
    const Edge& edge = region.edges()[e];
    const bool forward = edge.from == u;
    const int left = forward ? edge.left : edge.right;
    const int right = forward ? edge.right : edge.left;
    if (tiling.mate[left] == right) total += region.color(left) == Color::Black ? 1 : -1;
  }
  return total;
}

FlowSignature flow_signature(const Tiling& tiling, std::span<const Cut> cuts) {
  FlowSignature sig;
  for (const Cut& c : cuts) sig.push_back(flow(tiling, c));
  return sig;
}

FlowSignature flow_signature(const Tiling& tiling) {
  const auto cuts = cuts_basis(tiling.region);
  return flow_signature(tiling, cuts);
}

OrientationCounts orientation_counts(const Tiling& tiling) {
  const Region& region = tiling.region;
  if (region.lattice() != Lattice::Triangle) {
    throw RegionError("orientation counts are defined for lozenge tilings");
  }
  OrientationCounts out;
  for (const auto& [a, b] : tiling.tiles()) {
    Cell up = region.cells()[a];
    Cell down = region.cells()[b];
    if (up.down) std::swap(up, down);
    if (down.x == up.x && down.y == up.y) {
      ++out.xy;
    } else if (down.x == up.x - 1) {
      ++out.xz;
    } else {
      ++out.yz;
    }
  }
  return out;
}

}  // namespace calisson
