#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <queue>
#include <stdexcept>
#include <vector>

#include "topology.hpp"

/// Distance statistics for hardware graphs, both by brute-force breadth
/// first search and by closed forms in exact rational arithmetic. Distances
/// count coupling-graph edges; statistics run over unordered node pairs.

namespace qroute {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct DistanceStats {
  BigInt total;          // sum of pairwise distances
  BigRat mean;           // total / pair_count, exact
  int max = 0;           // graph diameter
  long long pair_count = 0;
};

/// Additive pieces of the sparse-layout pairwise distance total, split by
/// square relation. With dx >= dy (devices are rotated so this holds):
///  * l_sq1, l_p1, l_p2, l_p3 sum corner-to-corner distances over square
///    pairs whose row offset differs from their column offset, partitioned
///    by which offset dominates and by boundary clipping;
///  * l_q is the in-square approach cost added once per qubit pair across
///    any such square pair;
///  * n_sq counts unordered square pairs, split into n_sq1 (equal offsets,
///    diagonal neighbours in the square grid) and n_sq2 (the rest);
///  * d_neq and d_eq are the resulting distance totals for qubit pairs in
///    unequal-offset and equal-offset (incl. same-square) square pairs.
struct SparseDistanceTerms {
  BigInt l_sq1, l_p1, l_p2, l_p3;
  BigInt l_q;
  BigInt n_sq, n_sq1, n_sq2;
  BigInt d_neq, d_eq;
};

namespace detail {

inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::logic_error("exact_div by zero");
  if (num % den != 0) throw std::logic_error("exact_div: not divisible");
  return num / den;
}

inline std::vector<int> bfs_from(const HardwareGraph& g, int src) {
  std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
  std::queue<int> q;
  dist[static_cast<size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace detail

/// Full distance table, one row per source node.
inline std::vector<std::vector<int>> all_pairs_distances(const HardwareGraph& g) {
  std::vector<std::vector<int>> table;
  table.reserve(static_cast<size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) {
    auto row = detail::bfs_from(g, v);
    for (int d : row)
      if (d < 0) throw std::runtime_error("unreachable pair in hardware graph");
    table.push_back(std::move(row));
  }
  return table;
}

/// Brute-force statistics over all unordered pairs.
inline DistanceStats stats_bruteforce(const HardwareGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw std::domain_error("distance statistics need at least 2 nodes");
  long long ordered_total = 0;
  int max_d = 0;
  for (int v = 0; v < n; ++v) {
    const auto dist = detail::bfs_from(g, v);
    for (int d : dist) {
      if (d < 0) throw std::runtime_error("unreachable pair in hardware graph");
      ordered_total += d;
      if (d > max_d) max_d = d;
    }
  }
  DistanceStats st;
  st.total = BigInt(ordered_total) / 2;
  st.mean = BigRat(BigInt(ordered_total), BigInt(n) * (n - 1));
  st.max = max_d;
  st.pair_count = static_cast<long long>(n) * (n - 1) / 2;
  return st;
}

// Closed forms for chains.

inline BigInt total_linear_closed(long long n) {
  if (n < 2) throw std::domain_error("undefined statistic: chain needs n >= 2");
  const BigInt bn(n);
  return detail::exact_div(bn * (bn - 1) * (bn + 1), 6);
}

inline BigRat mean_linear_closed(long long n) {
  if (n < 2) throw std::domain_error("undefined statistic: chain needs n >= 2");
  return BigRat(BigInt(n) + 1, 3);
}

inline long long max_linear_closed(long long n) {
  if (n < 2) throw std::domain_error("undefined statistic: chain needs n >= 2");
  return n - 1;
}

// Closed forms for rectangular grids (Manhattan distances).

inline BigInt total_rect_closed(long long lx, long long ly) {
  if (lx < 1 || ly < 1 || lx * ly < 2)
    throw std::domain_error("undefined statistic: grid needs at least 2 nodes");
  const BigInt n = BigInt(lx) * ly;
  return detail::exact_div(n * (n - 1) * (BigInt(lx) + ly), 6);
}

inline BigRat mean_rect_closed(long long lx, long long ly) {
  if (lx < 1 || ly < 1 || lx * ly < 2)
    throw std::domain_error("undefined statistic: grid needs at least 2 nodes");
  return BigRat(BigInt(lx) + ly, 3);
}

inline long long max_rect_closed(long long lx, long long ly) {
  if (lx < 1 || ly < 1 || lx * ly < 2)
    throw std::domain_error("undefined statistic: grid needs at least 2 nodes");
  return lx + ly - 2;
}

// Closed forms for the sparse layout.

/// Distance-total pieces for a sparse device. Orientation is normalized
/// internally (dx and dy swapped if needed) so that dx >= dy; the totals
/// are rotation invariant.
inline SparseDistanceTerms sparse_distance_terms(int m_in, int dx_in, int dy_in) {
  if (m_in < 1 || dx_in < 1 || dy_in < 1)
    throw std::invalid_argument("sparse layout requires m, dx, dy >= 1");
  const BigInt m(m_in);
  const BigInt dx(std::max(dx_in, dy_in));
  const BigInt dy(std::min(dx_in, dy_in));
  using detail::exact_div;

  SparseDistanceTerms t;
  t.l_sq1 = exact_div(
      m * dy * (dy - 1) * (dy - 2) * (4 + (1 + 10 * dx) * dy - 3 * dy * dy), 30);
  t.l_p1 = exact_div(
      m * dy * (dy - 1) * (dy - 2) * (7 * dy * dy + dy + 4), 30);
  t.l_p2 = exact_div(
      m * dy * (dy - 1) * (dx - dy) * (5 * dy * dy + dy + 2), 6);
  t.l_p3 = exact_div(
      m * dy * dy * (dx - dy) * (dx - dy - 1) * (dx + 2 * dy - 2), 3);
  t.l_q = 32 * m * m * m;

  t.n_sq = exact_div(dx * dy * (dx * dy - 1), 2);
  t.n_sq1 = exact_div(dy * (dy - 1) * (3 * dx - dy - 1), 3);
  t.n_sq2 = t.n_sq - t.n_sq1;

  t.d_neq = 16 * m * m * (t.l_sq1 + t.l_p1 + t.l_p2 + t.l_p3) + t.l_q * t.n_sq2;

  // Equal-offset square pairs, including each square with itself. The
  // bracket is the per-diagonal distance total for offset n; boundary rows
  // and columns contribute the dy-offset term (dx - dy + 1) extra times.
  const BigInt inner = (13 * m * m + 2) * (2 * dy - 1) +
                       24 * m * m * dy * (dy - 1) - 3 * (17 * m * m + 2);
  const BigInt diag = exact_div(4 * m * dy * (dy - 1) * inner, 18);
  const BigInt edge = exact_div(
      2 * (dx - dy + 1) * m * dy *
          (13 * m * m * dy + 16 * m * m * dy * dy - 17 * m * m + 2 * dy - 2),
      3);
  t.d_eq = diag + edge;
  return t;
}

inline BigRat mean_sparse_closed(int m, int dx, int dy) {
  const SparseDistanceTerms t = sparse_distance_terms(m, dx, dy);
  const BigInt n = BigInt(4) * m * dx * dy;
  if (n < 2) throw std::domain_error("distance statistics need at least 2 nodes");
  return BigRat(2 * (t.d_neq + t.d_eq), n * (n - 1));
}

/// Mean distance of a square device (dx = dy = d) in radical-free form;
/// agrees exactly with mean_sparse_closed(m, d, d).
inline BigRat mean_sparse_square_closed(int m_in, int d_in) {
  if (m_in < 1 || d_in < 1)
    throw std::invalid_argument("square device requires m, d >= 1");
  const BigInt m(m_in), d(d_in);
  const BigInt n = 4 * m * d * d;
  const BigInt m2 = m * m, d2 = d * d;
  const BigInt num = 336 * m2 * d2 * d2 + 20 * m2 * d2 + 40 * d2 -
                     30 * d * m2 - 60 * d + 34 * m2 + 20;
  return BigRat(num, 90 * d * (n - 1));
}

/// Diameter of a square device: 2*m*d. There is no closed form when
/// dx != dy; use stats_bruteforce there.
inline long long max_sparse_closed(int m, int dx, int dy) {
  if (m < 1 || dx < 1 || dy < 1)
    throw std::invalid_argument("sparse layout requires m, dx, dy >= 1");
  if (dx != dy)
    throw std::domain_error("no closed-form diameter for dx != dy");
  return 2LL * m * dx;
}

}  // namespace qroute
