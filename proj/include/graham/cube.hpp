#ifndef GRAHAM_CUBE_HPP_
#define GRAHAM_CUBE_HPP_

// Hypercube geometry: vertices of {0,1}^n as n-bit integers, the canonical
// edge index of the complete graph on them, and planar K4 subgraphs.
//
// Coordinate i (1-based) lives in bit i-1 of a vertex.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graham {

using vertex_t = std::uint32_t;
using edge_t = std::uint32_t;

/// Largest dimension for which vertices and edge ids fit the 32-bit types.
inline constexpr int kMaxDimension = 16;

inline void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside 0.." +
                                std::to_string(kMaxDimension));
}

inline constexpr std::uint64_t vertex_count(int n) {
  return std::uint64_t{1} << n;
}

/// Number of edges of K(C_n): 2^(2n-1) - 2^(n-1).
inline constexpr std::uint64_t edge_count(int n) {
  const std::uint64_t v = vertex_count(n);
  return v * (v - 1) / 2;
}

/// Colexicographic index of the pair {u, v}; no validation.
inline constexpr edge_t edge_index_unchecked(vertex_t u, vertex_t v) {
  if (u > v) std::swap(u, v);
  return static_cast<edge_t>(std::uint64_t{v} * (v - 1) / 2 + u);
}

inline edge_t edge_index(vertex_t u, vertex_t v, int n) {
  check_dimension(n);
  if (u == v) throw std::invalid_argument("edge_index: equal endpoints");
  if (u >= vertex_count(n) || v >= vertex_count(n))
    throw std::invalid_argument("edge_index: vertex out of range");
  return edge_index_unchecked(u, v);
}

/// Inverse of edge_index: returns (u, v) with u < v.
inline std::pair<vertex_t, vertex_t> edge_endpoints(edge_t e) {
  const std::uint64_t k = e;
  auto v = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (v * (v - 1) / 2 > k) --v;
  while ((v + 1) * v / 2 <= k) ++v;
  const std::uint64_t u = k - v * (v - 1) / 2;
  return {static_cast<vertex_t>(u), static_cast<vertex_t>(v)};
}

/// Four coplanar vertices and the six edges among them, both sorted.
struct PlanarQuad {
  std::array<vertex_t, 4> vertices{};
  std::array<edge_t, 6> edges{};

  friend bool operator==(const PlanarQuad&, const PlanarQuad&) = default;
  friend auto operator<=>(const PlanarQuad&, const PlanarQuad&) = default;
};

/// The six sorted edge ids among four distinct vertices.
inline std::array<edge_t, 6> quad_edges(vertex_t a, vertex_t b, vertex_t c,
                                        vertex_t d) {
  std::array<edge_t, 6> e{edge_index_unchecked(a, b), edge_index_unchecked(a, c),
                          edge_index_unchecked(a, d), edge_index_unchecked(b, c),
                          edge_index_unchecked(b, d), edge_index_unchecked(c, d)};
  std::sort(e.begin(), e.end());
  return e;
}

inline PlanarQuad make_quad(vertex_t a, vertex_t b, vertex_t c, vertex_t d) {
  PlanarQuad q;
  q.vertices = {a, b, c, d};
  std::sort(q.vertices.begin(), q.vertices.end());
  q.edges = quad_edges(a, b, c, d);
  return q;
}

/// Rank of the three difference vectors p1-p0, p2-p0, p3-p0 in Q^n.
/// Fraction-free Gaussian elimination on small integers.
inline int affine_rank(const std::array<vertex_t, 4>& p, int n) {
  std::array<std::vector<long long>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    rows[r].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      rows[r][i] = static_cast<long long>((p[r + 1] >> i) & 1U) -
                   static_cast<long long>((p[0] >> i) & 1U);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < 3; ++r) {
      const long long f = rows[r][col];
      if (f == 0) continue;
      const long long g = rows[rank][col];
      for (int i = 0; i < n; ++i)
        rows[r][i] = rows[r][i] * g - rows[rank][i] * f;
    }
    ++rank;
  }
  return rank;
}

inline bool is_coplanar(const std::array<vertex_t, 4>& p, int n) {
  check_dimension(n);
  for (int i = 0; i < 4; ++i) {
    if (p[i] >= vertex_count(n))
      throw std::invalid_argument("is_coplanar: vertex out of range");
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j])
        throw std::invalid_argument("is_coplanar: duplicate vertices");
  }
  return affine_rank(p, n) <= 2;
}

/// Streams every planar quad of K(C_n) as four vertices (a, b, c, d) where
/// {a, c} and {b, d} are the two diagonals of the parallelogram.
///
/// Two vertex pairs with equal coordinate sum u+v form a parallelogram. A sum
/// vector in {0,1,2}^n is the pair (both = u&v, diff = u^v); the pairs sharing
/// it are (both|x, both|(diff^x)) for x ranging over subsets of diff. Order:
/// diff ascending, then both ascending, then pair index lexicographically.
template <class Visitor>
void for_each_planar_quad_raw(int n, Visitor&& visit) {
  check_dimension(n);
  if (n < 2) return;
  const vertex_t full = static_cast<vertex_t>(vertex_count(n) - 1);
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  for (vertex_t diff = 1; diff <= full; ++diff) {
    if (std::popcount(diff) < 2) continue;
    const vertex_t low = diff & (~diff + 1);
    const vertex_t rest = diff ^ low;
    const vertex_t free = full ^ diff;
    // Subsets of `free`, ascending: iterate s = (s - free) & free.
    vertex_t both = 0;
    while (true) {
      pairs.clear();
      vertex_t sub = 0;
      while (true) {
        const vertex_t x = low | sub;
        pairs.emplace_back(both | x, both | (diff ^ x));
        if (sub == rest) break;
        sub = (sub - rest) & rest;
      }
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
          visit(pairs[i].first, pairs[j].first, pairs[i].second,
                pairs[j].second);
      if (both == free) break;
      both = (both - free) & free;
    }
  }
}

/// Streams every planar quad exactly once, in a deterministic order.
template <class Visitor>
void for_each_planar_quad(int n, Visitor&& visit) {
  for_each_planar_quad_raw(n, [&](vertex_t a, vertex_t b, vertex_t c,
                                   vertex_t d) { visit(make_quad(a, b, c, d)); });
}

inline std::vector<PlanarQuad> enumerate_planar_quads(int n) {
  std::vector<PlanarQuad> out;
  for_each_planar_quad(n, [&](const PlanarQuad& q) { out.push_back(q); });
  return out;
}

using big_int = boost::multiprecision::cpp_int;

struct CountRow {
  int n = 0;
  big_int edges;  // n_E
  big_int quads;  // n_K
};

/// Closed forms for the edge and planar-K4 counts of K(C_n).
inline CountRow count_row(int n) {
  if (n < 2 || n > 64)
    throw std::invalid_argument("count_row: n must be in 2..64");
  CountRow row;
  row.n = n;
  const big_int two_n = big_int{1} << n;
  row.edges = (big_int{1} << (2 * n - 1)) - (big_int{1} << (n - 1));
  big_int three_n = 1;
  for (int i = 0; i < n; ++i) three_n *= 3;
  // 2^(n-3) * (3^n - 2^(n+1) + 1); at n = 2 the power is 1/2 and the bracket
  // (here 2) is even, so the product is taken as a rational first.
  const big_int bracket = three_n - 2 * two_n + 1;
  if (n >= 3) {
    row.quads = (big_int{1} << (n - 3)) * bracket;
  } else {
    const big_int num = bracket;
    const big_int den = big_int{1} << (3 - n);
    if (num % den != 0) throw std::logic_error("count_row: non-integer n_K");
    row.quads = num / den;
  }
  return row;
}

}  // namespace graham

#endif  // GRAHAM_CUBE_HPP_
