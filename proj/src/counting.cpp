#include "calisson/counting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include <gmp.h>
#include <mpfr.h>

#include "calisson/tiling.hpp"

namespace calisson {

namespace {

SignedBipartiteMatrix build_matrix(const BipartiteGraph& g, std::vector<int> edge_sign) {
  SignedBipartiteMatrix m;
  m.rows = static_cast<int>(g.black.size());
  m.cols = static_cast<int>(g.white.size());
  m.row_of.assign(std::size_t(g.vertex_count()), -1);
  m.col_of.assign(std::size_t(g.vertex_count()), -1);
  for (int i = 0; i < m.rows; ++i) m.row_of[g.black[i]] = i;
  for (int j = 0; j < m.cols; ++j) m.col_of[g.white[j]] = j;
  m.entries.assign(std::size_t(m.rows) * m.cols, 0);
  m.entry_edge.assign(m.entries.size(), -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [b, w] = g.edges[e];
    const std::size_t at = std::size_t(m.row_of[b]) * m.cols + m.col_of[w];
    m.entries[at] = edge_sign[e];
    m.entry_edge[at] = static_cast<int>(e);
  }
  m.edge_sign = std::move(edge_sign);
  return m;
}

// Faces on the two sides of every edge: dart 2e (first -> second) and 2e+1.
std::vector<int> dart_faces(const BipartiteGraph& g, const FaceSet& fs) {
  std::vector<int> face(g.edges.size() * 2, -1);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    const Face& face_f = fs.faces[f];
    for (int i = 0; i < face_f.size(); ++i) {
      const int e = face_f.edges[i];
      const bool along = g.edges[e].first == face_f.cells[i];
      face[std::size_t(e) * 2 + (along ? 0 : 1)] = static_cast<int>(f);
    }
  }
  return face;
}

bool face_ok(const Face& f, std::span<const int> edge_sign) {
  int negative = 0;
  for (int e : f.edges) negative += edge_sign[e] < 0 ? 1 : 0;
  return negative % 2 == (f.size() / 2 + 1) % 2;
}

template <typename T, typename Wide>
T bareiss(std::vector<T> a, int n) {
  if (n == 0) return T(1);
  T prev = 1;
  int sign = 1;
  auto at = [&](int i, int j) -> T& { return a[std::size_t(i) * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return T(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    const T pivot = at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const T lead = at(i, k);
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = T((Wide(at(i, j)) * Wide(pivot) - Wide(lead) * Wide(at(k, j))) / Wide(prev));
      }
      at(i, k) = 0;
    }
    prev = pivot;
  }
  return sign < 0 ? T(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

BigInt abs_det(const SignedBipartiteMatrix& m) {
  if (m.rows != m.cols) return 0;
  const BigInt d = determinant(m.entries, m.rows);
  return d < 0 ? BigInt(-d) : d;
}

}  // namespace

SignedBipartiteMatrix unsigned_matrix(const BipartiteGraph& g) {
  return build_matrix(g, std::vector<int>(g.edges.size(), 1));
}

std::vector<int> parity_violations(const BipartiteGraph& g, std::span<const int> edge_sign) {
  const FaceSet fs = face_walk(g);
  std::vector<int> out;
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (int(f) == fs.outer) continue;
    if (!face_ok(fs.faces[f], edge_sign)) out.push_back(static_cast<int>(f));
  }
  return out;
}

SignedBipartiteMatrix kasteleyn_sign(const BipartiteGraph& g) {
  const FaceSet fs = face_walk(g);
  const int faces = static_cast<int>(fs.faces.size());
  const long euler = long(g.vertex_count()) - long(g.edges.size()) + faces;
  if (g.vertex_count() > 0 && euler != 2) {
    throw Error("face walk found " + std::to_string(faces) + " faces; the embedding is not planar");
  }
  const std::vector<int> side = dart_faces(g, fs);

  // Breadth-first spanning tree of the dual graph.
  std::vector<std::vector<std::pair<int, int>>> dual(static_cast<std::size_t>(faces));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int a = side[2 * e];
    const int b = side[2 * e + 1];
    if (a == b) continue;
    dual[a].emplace_back(b, int(e));
    dual[b].emplace_back(a, int(e));
  }
  std::vector<int> parent_edge(std::size_t(faces), -1);
  std::vector<int> parent(std::size_t(faces), -1);
  std::vector<int> order{fs.outer};
  std::vector<char> seen(std::size_t(faces), 0);
  seen[fs.outer] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [next, e] : dual[order[i]]) {
      if (seen[next]) continue;
      seen[next] = 1;
      parent[next] = order[i];
      parent_edge[next] = e;
      order.push_back(next);
    }
  }

  std::vector<int> sign(g.edges.size(), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    if (f == fs.outer) continue;
    if (!face_ok(fs.faces[f], sign)) sign[parent_edge[f]] = -sign[parent_edge[f]];
  }
  return build_matrix(g, std::move(sign));
}

BigInt determinant(std::span<const int> matrix, int n) {
  // Hadamard's bound caps every minor met during elimination.
  double log2_bound = 0.0;
  for (int i = 0; i < n; ++i) {
    double norm = 0.0;
    for (int j = 0; j < n; ++j) norm += double(matrix[std::size_t(i) * n + j]) * matrix[std::size_t(i) * n + j];
    if (norm == 0.0) return 0;
    log2_bound += 0.5 * std::log2(norm);
  }
  if (log2_bound < 60.0) {
    std::vector<std::int64_t> a(matrix.begin(), matrix.end());
    return BigInt(bareiss<std::int64_t, __int128>(std::move(a), n));
  }
  std::vector<BigInt> a(matrix.begin(), matrix.end());
  return bareiss<BigInt, BigInt>(std::move(a), n);
}

BigInt count_tilings(const Region& region) {
  if (!region.balanced()) return 0;
  return abs_det(kasteleyn_sign(adjacency(region)));
}

BigInt det_unsigned(const Region& region) {
  if (!region.balanced()) return 0;
  return abs_det(unsigned_matrix(adjacency(region)));
}

int matching_parity(const SignedBipartiteMatrix& m, std::span<const int> mate) {
  std::vector<int> perm(std::size_t(m.rows), -1);
  for (std::size_t cell = 0; cell < m.row_of.size(); ++cell) {
    const int r = m.row_of[cell];
    if (r >= 0) perm[r] = m.col_of[mate[cell]];
  }
  int sign = 1;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = int(i); !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int monomial_sign(const SignedBipartiteMatrix& m, std::span<const int> mate) {
  int sign = matching_parity(m, mate);
  for (std::size_t cell = 0; cell < m.row_of.size(); ++cell) {
    const int r = m.row_of[cell];
    if (r >= 0) sign *= m.at(r, m.col_of[mate[cell]]);
  }
  return sign;
}

SignClasses sign_classes(const Region& region) {
  SignClasses out;
  if (!region.balanced()) return out;
  const SignedBipartiteMatrix m = unsigned_matrix(adjacency(region));
  for_each_tiling(region, [&](std::span<const int> mate) {
    (matching_parity(m, mate) > 0 ? out.plus : out.minus) += 1;
    return true;
  });
  return out;
}

BigInt rectangle_count(int rows, int cols, long precision_bits) {
  if (rows < 1 || cols < 1) throw Error("rectangle sides must be positive");
  if (cols % 2 != 0) throw Error("the column count must be even; transpose the rectangle");
  const long needed = 2L * rows * cols;
  if (precision_bits == 0) precision_bits = needed + 64;
  if (precision_bits < needed) {
    throw PrecisionError(std::to_string(precision_bits) + " bits is below the " +
                         std::to_string(needed) + " needed for a " + std::to_string(rows) +
                         "x" + std::to_string(cols) + " rectangle");
  }

  mpfr_t pi, prod, a, b, t;
  for (mpfr_ptr v : {pi, prod, a, b, t}) mpfr_init2(v, precision_bits);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_ui(prod, 1, MPFR_RNDN);
  for (int k = 1; k <= cols / 2; ++k) {
    mpfr_mul_ui(a, pi, k, MPFR_RNDN);
    mpfr_div_ui(a, a, cols + 1, MPFR_RNDN);
    mpfr_cos(a, a, MPFR_RNDN);
    mpfr_sqr(a, a, MPFR_RNDN);
    for (int l = 1; l <= rows; ++l) {
      mpfr_mul_ui(b, pi, l, MPFR_RNDN);
      mpfr_div_ui(b, b, rows + 1, MPFR_RNDN);
      mpfr_cos(b, b, MPFR_RNDN);
      mpfr_sqr(b, b, MPFR_RNDN);
      mpfr_add(t, a, b, MPFR_RNDN);
      mpfr_sqrt(t, t, MPFR_RNDN);
      mpfr_mul_ui(t, t, 2, MPFR_RNDN);
      mpfr_mul(prod, prod, t, MPFR_RNDN);
    }
  }
  mpfr_rint(a, prod, MPFR_RNDN);
  mpfr_sub(b, prod, a, MPFR_RNDN);
  mpfr_abs(b, b, MPFR_RNDN);
  const bool integral = mpfr_cmp_d(b, 1e-6) < 0;

  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, a, MPFR_RNDN);
  char* digits = mpz_get_str(nullptr, 10, z);
  const std::string text(digits);
  void (*release)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &release);
  release(digits, text.size() + 1);
  mpz_clear(z);
  for (mpfr_ptr v : {pi, prod, a, b, t}) mpfr_clear(v);
  mpfr_free_cache();

  if (!integral) {
    throw PrecisionError("product for " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " is not within 1e-6 of an integer at " +
                         std::to_string(precision_bits) + " bits");
  }
  return BigInt(text);
}

BigInt hexagon_count(int r, int c, int m) {
  if (r < 1 || c < 1 || m < 1) throw Error("hexagon sides must be positive");
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= m; ++j) {
      num *= c + i + j - 1;
      den *= i + j - 1;
    }
  }
  return num / den;
}

}  // namespace calisson
