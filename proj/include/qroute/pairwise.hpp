#pragma once

#include <queue>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "topology.hpp"

/// Per-gate routing: every two-qubit gate is brought to adjacency by SWAP
/// chains along a shortest path and undone afterwards, so the placement is
/// restored after each gate. Both endpoints move toward the middle in
/// parallel, which needs l-1 swaps in ceil((l-1)/2) layers for a gate at
/// distance l, and twice that for the round trip.

namespace qroute {

struct GateRouting {
  int gate_index = 0;
  int distance = 0;         // path length l in edges
  int swaps_one_way = 0;    // l - 1
  int depth_added = 0;      // ceil((l-1)/2) swap layers one way
  int swaps_round_trip = 0; // 2 (l - 1)
};

struct PairwiseReport {
  std::vector<GateRouting> gates;  // two-qubit gates only
  long long total_distance = 0;
  long long total_swaps_one_way = 0;
  long long total_depth_added = 0;
  long long total_swaps_round_trip = 0;
  // SWAPs stay atomic in compiled output; physically each one decomposes
  // into this many sqrt-of-SWAP pulses.
  static constexpr int sqrt_swap_factor = 2;
};

/// One compiled instruction. layer 0 marks the original logic gates; SWAPs
/// inserted by the router carry the 1-based index of their parallel layer.
struct CompiledItem {
  Gate gate;
  int layer = 0;
};

struct PairwiseResult {
  int node_count = 0;
  std::vector<CompiledItem> items;
  PairwiseReport report;
};

/// Shortest path from a to b, endpoints included. Deterministic: among all
/// shortest paths the lexicographically smallest node sequence is returned.
inline std::vector<int> shortest_path(const HardwareGraph& g, int from, int to) {
  if (from < 0 || from >= g.node_count() || to < 0 || to >= g.node_count())
    throw std::out_of_range("node id out of range");
  if (from == to) throw std::invalid_argument("degenerate pair: equal endpoints");
  std::vector<int> dist(static_cast<size_t>(g.node_count()), -1);
  std::queue<int> q;
  dist[static_cast<size_t>(to)] = 0;
  q.push(to);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
  }
  if (dist[static_cast<size_t>(from)] < 0)
    throw std::runtime_error("unreachable pair");
  std::vector<int> path{from};
  int v = from;
  while (v != to) {
    // Neighbours are sorted, so the first one strictly closer to the target
    // extends the lexicographically smallest shortest path.
    for (int w : g.neighbors(v))
      if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
        v = w;
        break;
      }
    path.push_back(v);
  }
  return path;
}

/// Compiles a circuit for the given hardware. Logical qubit q starts at
/// physical node q; the mirrored unwind after every gate restores this
/// placement, so reported operands of logic gates are stable.
inline PairwiseResult compile_pairwise(const HardwareGraph& g, const Circuit& c) {
  if (c.qubit_count > g.node_count())
    throw std::invalid_argument("circuit needs more qubits than hardware nodes");
  const int n = g.node_count();
  std::vector<int> at(static_cast<size_t>(n));      // logical qubit -> node
  std::vector<int> holds(static_cast<size_t>(n));   // node -> logical qubit
  for (int i = 0; i < n; ++i) at[static_cast<size_t>(i)] = holds[static_cast<size_t>(i)] = i;

  PairwiseResult out;
  out.node_count = n;
  int next_layer = 0;

  const auto apply_swap = [&](int u, int v) {
    const int a = holds[static_cast<size_t>(u)], b = holds[static_cast<size_t>(v)];
    holds[static_cast<size_t>(u)] = b;
    holds[static_cast<size_t>(v)] = a;
    at[static_cast<size_t>(a)] = v;
    at[static_cast<size_t>(b)] = u;
  };
  const auto emit_swap = [&](int u, int v, int layer) {
    out.items.push_back({Gate{"SWAP", {u, v}, {}}, layer});
    apply_swap(u, v);
  };

  for (size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& gate = c.gates[gi];
    if (gate.operands.size() == 1) {
      out.items.push_back(
          {Gate{gate.name, {at[static_cast<size_t>(gate.operands[0])]}, gate.params}, 0});
      continue;
    }
    const int pa = at[static_cast<size_t>(gate.operands[0])];
    const int pb = at[static_cast<size_t>(gate.operands[1])];
    const auto path = shortest_path(g, pa, pb);
    const int l = static_cast<int>(path.size()) - 1;
    const int fwd_layers = l / 2;            // ceil((l-1)/2)
    const int back_steps = (l - 1) / 2;      // floor((l-1)/2)

    // Walk both endpoints inward; step k moves the first endpoint along
    // (path[k-1], path[k]) and, while steps remain, the second endpoint
    // along (path[l-k+1], path[l-k]). The two swaps never touch.
    for (int k = 1; k <= fwd_layers; ++k) {
      ++next_layer;
      emit_swap(path[static_cast<size_t>(k - 1)], path[static_cast<size_t>(k)], next_layer);
      if (k <= back_steps)
        emit_swap(path[static_cast<size_t>(l - k + 1)], path[static_cast<size_t>(l - k)],
                  next_layer);
    }
    const int qa = at[static_cast<size_t>(gate.operands[0])];
    const int qb = at[static_cast<size_t>(gate.operands[1])];
    if (!g.has_edge(qa, qb)) throw std::logic_error("routed gate is not adjacent");
    out.items.push_back({Gate{gate.name, {qa, qb}, gate.params}, 0});
    for (int k = fwd_layers; k >= 1; --k) {
      ++next_layer;
      if (k <= back_steps)
        emit_swap(path[static_cast<size_t>(l - k)], path[static_cast<size_t>(l - k + 1)],
                  next_layer);
      emit_swap(path[static_cast<size_t>(k)], path[static_cast<size_t>(k - 1)], next_layer);
    }

    GateRouting r;
    r.gate_index = static_cast<int>(gi);
    r.distance = l;
    r.swaps_one_way = l - 1;
    r.depth_added = fwd_layers;
    r.swaps_round_trip = 2 * (l - 1);
    out.report.gates.push_back(r);
    out.report.total_distance += l;
    out.report.total_swaps_one_way += r.swaps_one_way;
    out.report.total_depth_added += r.depth_added;
    out.report.total_swaps_round_trip += r.swaps_round_trip;
  }

  for (int i = 0; i < n; ++i)
    if (at[static_cast<size_t>(i)] != i)
      throw std::logic_error("placement not restored after compilation");
  return out;
}

/// Compiled circuit in the standard grammar; parallel SWAP layers are
/// announced by "# layer k" comment lines.
inline void write_compiled(std::ostream& os, const PairwiseResult& r) {
  os << "qubits " << r.node_count << "\n";
  int current_layer = 0;
  for (const CompiledItem& item : r.items) {
    if (item.layer != 0 && item.layer != current_layer) {
      current_layer = item.layer;
      os << "# layer " << current_layer << "\n";
    }
    write_gate(os, item.gate);
  }
}

}  // namespace qroute
