#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "matching.hpp"
#include "permutation.hpp"
#include "topology.hpp"

/// Permutation routing by parallel neighbour sorts.
///
/// 2d devices route in three strictly sequential phases: (i) sort every
/// column so that each qubit reaches the intermediate row a perfect
/// matching assigned to it, (ii) sort every row by destination column,
/// (iii) sort every column by final position. The matchings guarantee that
/// after phase (i) no two qubits of a row head for the same column. Within
/// a phase the disjoint lines sort in lockstep; pass p of every line joins
/// one global layer, lines merged in index order.
///
/// Depth and swap bounds (K nodes per column, L per row, C columns, R rows):
/// phase sorts need at most their line length in passes, so depth <= 2K + L
/// and swaps <= C*K(K-1) + R*L(L-1)/2.

namespace qroute {

namespace detail {

struct PhaseOutcome {
  int depth = 0;
  long long swaps = 0;
};

/// key(token, position) must yield distinct keys within each line.
inline PhaseOutcome run_phase(const std::vector<std::vector<int>>& lines,
                              const std::function<long long(int, int)>& key,
                              std::vector<int>& token_at, std::vector<int>& node_of,
                              SwapSchedule& schedule) {
  std::vector<LineSortResult> sorted;
  sorted.reserve(lines.size());
  size_t max_passes = 0;
  for (const auto& line : lines) {
    std::vector<long long> keys;
    keys.reserve(line.size());
    for (size_t p = 0; p < line.size(); ++p)
      keys.push_back(key(token_at[static_cast<size_t>(line[p])], static_cast<int>(p)));
    sorted.push_back(sort_line(line, std::move(keys), token_at, node_of));
    max_passes = std::max(max_passes, sorted.back().passes.size());
  }
  PhaseOutcome out;
  for (size_t p = 0; p < max_passes; ++p) {
    std::vector<std::pair<int, int>> layer;
    for (const auto& res : sorted)
      if (p < res.passes.size())
        layer.insert(layer.end(), res.passes[p].begin(), res.passes[p].end());
    if (layer.empty()) continue;
    out.swaps += static_cast<long long>(layer.size());
    schedule.layers.push_back(std::move(layer));
    ++out.depth;
  }
  return out;
}

inline void check_routed(const std::vector<int>& node_of, const Permutation& perm) {
  for (int t = 0; t < perm.size(); ++t)
    if (node_of[static_cast<size_t>(t)] != perm[t])
      throw std::logic_error("routing did not realize the permutation");
}

}  // namespace detail

/// Chain devices sort once along the line; depth <= N, swaps <= N(N-1)/2.
inline RoutedPermutation route_linear(const HardwareGraph& g, const Permutation& perm) {
  if (g.layout().kind != LayoutKind::Linear)
    throw std::invalid_argument("route_linear requires a linear layout");
  const int n = g.node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> token_at(static_cast<size_t>(n)), node_of(static_cast<size_t>(n));
  std::vector<int> line(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    line[static_cast<size_t>(i)] = token_at[static_cast<size_t>(i)] =
        node_of[static_cast<size_t>(i)] = i;

  RoutedPermutation out;
  const auto phase = detail::run_phase(
      {line}, [&](int token, int) { return static_cast<long long>(perm[token]); },
      token_at, node_of, out.schedule);
  detail::check_routed(node_of, perm);
  out.report.depth = phase.depth;
  out.report.swaps = phase.swaps;
  out.report.bound_depth = n;
  out.report.bound_swaps = static_cast<long long>(n) * (n - 1) / 2;
  out.report.phase_depths = {phase.depth};
  return out;
}

namespace detail {

/// Shared three-phase engine for rectangular and sparse layouts.
inline RoutedPermutation route_by_columns(const HardwareGraph& g, const Permutation& perm,
                                          int bound_depth, long long bound_swaps) {
  const LayoutSpec& s = g.layout();
  const int n = g.node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  const int cols = s.column_count();
  const int col_len = s.column_length();
  const int rows = s.row_count();
  const int row_len = s.row_length();

  std::vector<int> dest_col(static_cast<size_t>(n)), dest_ypos(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    const auto [c, y] = column_position(s, perm[t]);
    dest_col[static_cast<size_t>(t)] = c;
    dest_ypos[static_cast<size_t>(t)] = y;
  }

  // Phase (i) targets. Matching y reserves, for each origin column, one slot
  // at vertical position y for a qubit bound to the matched destination
  // column; among the candidates the one highest in the column (smallest
  // current ypos) takes the slot.
  const auto matchings = decompose_matchings(build_routing_graph(s, perm));
  std::vector<std::vector<std::vector<int>>> pool(
      static_cast<size_t>(cols) + 1,
      std::vector<std::vector<int>>(static_cast<size_t>(cols) + 1));
  for (int c = 1; c <= cols; ++c)
    for (int y = 1; y <= col_len; ++y) {
      const int token = node_at_column(s, c, y);  // initial placement is identity
      pool[static_cast<size_t>(c)][static_cast<size_t>(dest_col[static_cast<size_t>(token)])]
          .push_back(token);
    }
  std::vector<size_t> pool_next(static_cast<size_t>((cols + 1) * (cols + 1)), 0);
  std::vector<int> target_ypos(static_cast<size_t>(n), 0);
  for (size_t y = 0; y < matchings.size(); ++y)
    for (const auto& [l, r, payload] : matchings[y].edges) {
      auto& candidates = pool[static_cast<size_t>(l)][static_cast<size_t>(r)];
      size_t& next = pool_next[static_cast<size_t>(l * (cols + 1) + r)];
      if (next >= candidates.size())
        throw std::logic_error("matching does not cover the waiting qubits");
      target_ypos[static_cast<size_t>(candidates[next++])] = static_cast<int>(y) + 1;
    }

  std::vector<int> token_at(static_cast<size_t>(n)), node_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    token_at[static_cast<size_t>(i)] = node_of[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> column_lines, row_lines;
  for (int c = 1; c <= cols; ++c) column_lines.push_back(column_path(s, c));
  for (int r = 1; r <= rows; ++r) row_lines.push_back(row_path(s, r));

  RoutedPermutation out;
  const auto p1 = detail::run_phase(
      column_lines,
      [&](int token, int) { return static_cast<long long>(target_ypos[static_cast<size_t>(token)]); },
      token_at, node_of, out.schedule);
  // Destination column is the key; the current position tie-breaks the
  // qubits that share one, keeping the sort keys distinct.
  const auto p2 = detail::run_phase(
      row_lines,
      [&](int token, int pos) {
        return static_cast<long long>(dest_col[static_cast<size_t>(token)]) * (row_len + 1) + pos;
      },
      token_at, node_of, out.schedule);
  const auto p3 = detail::run_phase(
      column_lines,
      [&](int token, int) { return static_cast<long long>(dest_ypos[static_cast<size_t>(token)]); },
      token_at, node_of, out.schedule);
  detail::check_routed(node_of, perm);

  out.report.depth = p1.depth + p2.depth + p3.depth;
  out.report.swaps = p1.swaps + p2.swaps + p3.swaps;
  out.report.bound_depth = bound_depth;
  out.report.bound_swaps = bound_swaps;
  out.report.phase_depths = {p1.depth, p2.depth, p3.depth};
  return out;
}

}  // namespace detail

/// Grid router: depth <= 2*ly + lx, swaps <= lx*ly*(lx + 2*ly - 3)/2.
inline RoutedPermutation route_rectangular(const HardwareGraph& g, const Permutation& perm) {
  const LayoutSpec& s = g.layout();
  if (s.kind != LayoutKind::Rectangular)
    throw std::invalid_argument("route_rectangular requires a rectangular layout");
  const long long lx = s.lx, ly = s.ly;
  return detail::route_by_columns(g, perm, static_cast<int>(2 * ly + lx),
                                  lx * ly * (lx + 2 * ly - 3) / 2);
}

/// Sparse router over generalized columns and rows:
/// depth <= 4*m*dy + 2*m*dx, swaps <= 2*m*dx*dy*(2*m*dx + 4*m*dy - 3).
inline RoutedPermutation route_sparse(const HardwareGraph& g, const Permutation& perm) {
  const LayoutSpec& s = g.layout();
  if (s.kind != LayoutKind::Sparse)
    throw std::invalid_argument("route_sparse requires a sparse layout");
  const long long m = s.m, dx = s.dx, dy = s.dy;
  return detail::route_by_columns(g, perm, static_cast<int>(4 * m * dy + 2 * m * dx),
                                  2 * m * dx * dy * (2 * m * dx + 4 * m * dy - 3));
}

/// One-square devices (dx = dy = 1) rearrange with a single neighbour sort
/// along the 4m-cycle: depth <= 4m instead of the generic 6m.
inline RoutedPermutation route_single_square(const HardwareGraph& g, const Permutation& perm) {
  const LayoutSpec& s = g.layout();
  const std::vector<int> line = single_square_line(s);  // validates the layout
  const int n = g.node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> pos_in_line(static_cast<size_t>(n));
  for (size_t p = 0; p < line.size(); ++p)
    pos_in_line[static_cast<size_t>(line[p])] = static_cast<int>(p);
  std::vector<int> token_at(static_cast<size_t>(n)), node_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    token_at[static_cast<size_t>(i)] = node_of[static_cast<size_t>(i)] = i;

  RoutedPermutation out;
  const auto phase = detail::run_phase(
      {line},
      [&](int token, int) {
        return static_cast<long long>(pos_in_line[static_cast<size_t>(perm[token])]);
      },
      token_at, node_of, out.schedule);
  detail::check_routed(node_of, perm);
  out.report.depth = phase.depth;
  out.report.swaps = phase.swaps;
  out.report.bound_depth = 4 * s.m;
  out.report.bound_swaps = static_cast<long long>(2) * s.m * (4 * s.m - 1);
  out.report.phase_depths = {phase.depth};
  return out;
}

}  // namespace qroute
