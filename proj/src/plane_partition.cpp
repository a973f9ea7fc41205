#include "calisson/plane_partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "calisson/height.hpp"

namespace calisson {

long PlanePartition::volume() const {
  return std::accumulate(entries.begin(), entries.end(), 0L);
}

void PlanePartition::validate() const {
  if (rows < 0 || cols < 0 || bound < 0) throw Error("partition dimensions must be non-negative");
  if (entries.size() != std::size_t(rows) * std::size_t(cols)) {
    throw Error("partition has " + std::to_string(entries.size()) + " entries, expected " +
                std::to_string(rows * cols));
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = at(i, j);
      const std::string where = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (v < 0) throw Error("negative part" + where);
      if (v > bound) throw Error("part exceeds " + std::to_string(bound) + where);
      if (i > 0 && at(i - 1, j) < v) throw Error("column increases" + where);
      if (j > 0 && at(i, j - 1) < v) throw Error("row increases" + where);
    }
  }
}

bool PlanePartition::valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

PlanePartition parse_partition(std::string_view text, int bound) {
  PlanePartition p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::vector<int> values;
    std::string token;
    while (row >> token) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError("bad partition entry '" + token + "'");
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (p.rows > 0 && int(values.size()) != p.cols) {
      throw ParseError("partition rows have different lengths");
    }
    p.cols = static_cast<int>(values.size());
    ++p.rows;
    p.entries.insert(p.entries.end(), values.begin(), values.end());
  }
  if (p.rows == 0) throw ParseError("empty partition");
  if (bound < 0) {
    bound = std::max(1, *std::max_element(p.entries.begin(), p.entries.end()));
  }
  p.bound = bound;
  p.validate();
  return p;
}

std::string serialize_partition(const PlanePartition& p) {
  std::string out;
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(p.at(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

// The cube (i, j, k) of the r x c x m box is drawn around the vertex
// (c + i - j, m + j - k) of make_hexagon(r, c, m); cubes on one (1,1,1) line
// share a vertex and stack from the box corner outwards.
Point cube_vertex(int c, int m, int i, int j, int k) { return Point{c + i - j, m + j - k}; }

}  // namespace

PlanePartition tiling_to_partition(const Tiling& tiling) {
  const auto shape = recognize_hexagon(tiling.region);
  if (!shape) throw RegionError("region is not a center-symmetric hexagon");
  const auto [r, c, m] = *shape;
  const Region model = make_hexagon(r, c, m);
  const Cell first = tiling.region.cells().front();
  const Cell model_first = model.cells().front();
  const int dx = first.x - model_first.x;
  const int dy = first.y - model_first.y;

  const HeightFunction h = heights_from_tiling(tiling);
  const ExtremalTiling low = min_tiling(tiling.region);
  const HeightFunction h0 = heights_from_tiling(*low.tiling);

  PlanePartition p{r, c, m, std::vector<int>(std::size_t(r) * c, 0)};
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      int column = 0;
      for (int k = 0; k < m; ++k) {
        const Point v = cube_vertex(c, m, i, j, k);
        const Point at{v.x + dx, v.y + dy};
        const int stacked = (h.at(at) - h0.at(at)) / 3;
        if (std::min({i, j, k}) < stacked) ++column;
      }
      p.entries[std::size_t(i) * c + j] = column;
    }
  }
  p.validate();
  return p;
}

Tiling partition_to_tiling(const PlanePartition& p, int r, int c, int m) {
  p.validate();
  const int tallest = p.entries.empty() ? 0 : *std::max_element(p.entries.begin(), p.entries.end());
  if (p.rows > r || p.cols > c || tallest > m) {
    throw Error("partition does not fit a " + std::to_string(r) + "x" + std::to_string(c) + "x" +
                std::to_string(m) + " box");
  }
  const Region region = make_hexagon(r, c, m);
  const ExtremalTiling low = min_tiling(region);
  HeightFunction h = heights_from_tiling(*low.tiling);
  for (int i = 0; i < p.rows; ++i) {
    for (int j = 0; j < p.cols; ++j) {
      for (int k = 0; k < p.at(i, j); ++k) {
        const int v = region.find_vertex(cube_vertex(c, m, i, j, k));
        h.values[v] += 3;
      }
    }
  }
  return tiling_from_heights(h);
}

std::vector<BigInt> macmahon_series(int r, int c, int m) {
  if (r < 1 || c < 1 || m < 1) throw Error("box sides must be positive");
  std::vector<BigInt> poly{1};
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= m; ++j) {
      const std::size_t a = std::size_t(c + i + j - 1);
      std::vector<BigInt> next(poly.size() + a, 0);
      for (std::size_t n = 0; n < poly.size(); ++n) {
        next[n] += poly[n];
        next[n + a] -= poly[n];
      }
      poly = std::move(next);
    }
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= m; ++j) {
      const std::size_t a = std::size_t(i + j - 1);
      const std::size_t deg = poly.size() - 1 - a;
      std::vector<BigInt> q(deg + 1, 0);
      for (std::size_t n = 0; n <= deg; ++n) q[n] = poly[n] + (n >= a ? q[n - a] : BigInt(0));
      for (std::size_t n = deg + 1; n < poly.size(); ++n) {
        const BigInt carry = n >= a && n - a <= deg ? q[n - a] : BigInt(0);
        if (poly[n] + carry != 0) throw Error("series division left a remainder");
      }
      poly = std::move(q);
    }
  }
  return poly;
}

std::vector<std::uint64_t> enumerate_partitions(int r, int c, int m) {
  if (r < 1 || c < 1 || m < 1) throw Error("box sides must be positive");
  std::vector<std::uint64_t> counts(std::size_t(r) * c * m + 1, 0);
  std::vector<int> a(std::size_t(r) * c, 0);
  auto fill = [&](auto&& self, int pos, int volume) -> void {
    if (pos == r * c) {
      ++counts[volume];
      return;
    }
    const int i = pos / c;
    const int j = pos % c;
    int cap = m;
    if (i > 0) cap = std::min(cap, a[std::size_t(i - 1) * c + j]);
    if (j > 0) cap = std::min(cap, a[std::size_t(i) * c + j - 1]);
    for (int v = 0; v <= cap; ++v) {
      a[pos] = v;
      self(self, pos + 1, volume + v);
    }
  };
  fill(fill, 0, 0);
  return counts;
}

}  // namespace calisson
