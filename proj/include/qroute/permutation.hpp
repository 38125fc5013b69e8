#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topology.hpp"

/// Permutations of hardware nodes, parallel swap schedules and their
/// verification. A schedule is a list of layers; the swaps of one layer act
/// on pairwise disjoint nodes and every pair must be a hardware edge.

namespace qroute {

class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
      if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("permutation image is not a bijection");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    return Permutation(std::move(img));
  }

  [[nodiscard]] int size() const { return static_cast<int>(image_.size()); }
  [[nodiscard]] int operator[](int i) const { return image_[static_cast<size_t>(i)]; }
  [[nodiscard]] const std::vector<int>& image() const { return image_; }

  [[nodiscard]] bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

 private:
  std::vector<int> image_;
};

struct SwapSchedule {
  std::vector<std::vector<std::pair<int, int>>> layers;

  [[nodiscard]] int depth() const { return static_cast<int>(layers.size()); }
  [[nodiscard]] long long swap_count() const {
    long long c = 0;
    for (const auto& layer : layers) c += static_cast<long long>(layer.size());
    return c;
  }
};

struct PermutationReport {
  int depth = 0;
  long long swaps = 0;
  int bound_depth = 0;
  long long bound_swaps = 0;
  std::vector<int> phase_depths;  // per routing phase, where applicable
};

struct RoutedPermutation {
  SwapSchedule schedule;
  PermutationReport report;
};

struct VerifyResult {
  bool ok = false;
  std::string message;
};

namespace detail {

/// Odd-even transposition passes over one line of nodes. keys[p] is the
/// sort key of the token currently at line[p]; swaps update the global
/// token maps. Passes are kept aligned (possibly empty) so that several
/// disjoint lines can be merged layer by layer.
struct LineSortResult {
  std::vector<std::vector<std::pair<int, int>>> passes;
  long long swaps = 0;
};

inline LineSortResult sort_line(const std::vector<int>& line,
                                std::vector<long long> keys,
                                std::vector<int>& token_at,
                                std::vector<int>& node_of) {
  const int n = static_cast<int>(line.size());
  {
    std::vector<long long> sorted_keys(keys);
    std::sort(sorted_keys.begin(), sorted_keys.end());
    if (std::adjacent_find(sorted_keys.begin(), sorted_keys.end()) != sorted_keys.end())
      throw std::invalid_argument("duplicate sort key");
  }
  LineSortResult res;
  for (int pass = 1; !std::is_sorted(keys.begin(), keys.end()); ++pass) {
    if (pass > n) throw std::logic_error("neighbour sort exceeded its pass bound");
    std::vector<std::pair<int, int>> layer;
    for (int i = (pass % 2 == 1) ? 0 : 1; i + 1 < n; i += 2) {
      if (keys[static_cast<size_t>(i)] <= keys[static_cast<size_t>(i + 1)]) continue;
      std::swap(keys[static_cast<size_t>(i)], keys[static_cast<size_t>(i + 1)]);
      const int u = line[static_cast<size_t>(i)], v = line[static_cast<size_t>(i + 1)];
      const int tu = token_at[static_cast<size_t>(u)], tv = token_at[static_cast<size_t>(v)];
      token_at[static_cast<size_t>(u)] = tv;
      token_at[static_cast<size_t>(v)] = tu;
      node_of[static_cast<size_t>(tu)] = v;
      node_of[static_cast<size_t>(tv)] = u;
      layer.emplace_back(std::min(u, v), std::max(u, v));
    }
    res.swaps += static_cast<long long>(layer.size());
    res.passes.push_back(std::move(layer));
  }
  return res;
}

}  // namespace detail

/// Sorts distinct keys on a line by parallel neighbour transpositions. Odd
/// passes compare positions (0,1), (2,3), ...; even passes (1,2), (3,4),
/// .... Needs at most N passes and N(N-1)/2 swaps; returned layers are the
/// non-empty passes, with swaps given as position pairs.
inline SwapSchedule parallel_neighbor_sort(const std::vector<long long>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> line(static_cast<size_t>(n)), token_at(static_cast<size_t>(n)),
      node_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    line[static_cast<size_t>(i)] = token_at[static_cast<size_t>(i)] =
        node_of[static_cast<size_t>(i)] = i;
  const auto res = detail::sort_line(line, keys, token_at, node_of);
  SwapSchedule s;
  for (const auto& pass : res.passes)
    if (!pass.empty()) s.layers.push_back(pass);
  return s;
}

/// Replays a schedule and checks it edge by edge, layer by layer, against
/// the target permutation.
inline VerifyResult verify_schedule(const HardwareGraph& g, const SwapSchedule& sched,
                                    const Permutation& perm) {
  const int n = g.node_count();
  if (perm.size() != n) return {false, "permutation size mismatch"};
  std::vector<int> node_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) node_of[static_cast<size_t>(i)] = i;
  std::vector<int> token_at = node_of;
  std::vector<int> seen(static_cast<size_t>(n), 0);
  for (size_t k = 0; k < sched.layers.size(); ++k) {
    const std::string at_layer = " at layer " + std::to_string(k + 1);
    for (const auto& [u, v] : sched.layers[k]) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        return {false, "node out of range" + at_layer};
      if (u == v || !g.has_edge(u, v))
        return {false, "non-edge swap" + at_layer + ": (" + std::to_string(u) + "," +
                           std::to_string(v) + ")"};
      if (seen[static_cast<size_t>(u)] == static_cast<int>(k + 1))
        return {false, "overlapping swaps" + at_layer + ": node " + std::to_string(u)};
      if (seen[static_cast<size_t>(v)] == static_cast<int>(k + 1))
        return {false, "overlapping swaps" + at_layer + ": node " + std::to_string(v)};
      seen[static_cast<size_t>(u)] = seen[static_cast<size_t>(v)] = static_cast<int>(k + 1);
      const int tu = token_at[static_cast<size_t>(u)], tv = token_at[static_cast<size_t>(v)];
      token_at[static_cast<size_t>(u)] = tv;
      token_at[static_cast<size_t>(v)] = tu;
      node_of[static_cast<size_t>(tu)] = v;
      node_of[static_cast<size_t>(tv)] = u;
    }
  }
  for (int t = 0; t < n; ++t)
    if (node_of[static_cast<size_t>(t)] != perm[t])
      return {false, "wrong final position for qubit " + std::to_string(t) + ": at node " +
                         std::to_string(node_of[static_cast<size_t>(t)]) + ", expected " +
                         std::to_string(perm[t])};
  return {true, "ok"};
}

// File formats. Permutation: one "src dst" pair per line, every source
// exactly once. Schedule: one line per layer, swaps written "u-v" and
// separated by spaces. Report: key=value lines.

inline void write_permutation(std::ostream& os, const Permutation& p) {
  for (int i = 0; i < p.size(); ++i) os << i << " " << p[i] << "\n";
}

inline Permutation parse_permutation(std::istream& in, int expected_n) {
  std::vector<int> image(static_cast<size_t>(expected_n), -1);
  std::vector<char> have(static_cast<size_t>(expected_n), 0);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::istringstream ls(hash == std::string::npos ? raw : raw.substr(0, hash));
    int src, dst;
    if (!(ls >> src)) continue;
    if (!(ls >> dst))
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'src dst'");
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("line " + std::to_string(line_no) + ": trailing tokens");
    if (src < 0 || src >= expected_n || dst < 0 || dst >= expected_n)
      throw std::runtime_error("line " + std::to_string(line_no) + ": node out of range");
    if (have[static_cast<size_t>(src)])
      throw std::runtime_error("line " + std::to_string(line_no) + ": duplicate source " +
                               std::to_string(src));
    have[static_cast<size_t>(src)] = 1;
    image[static_cast<size_t>(src)] = dst;
  }
  for (int i = 0; i < expected_n; ++i)
    if (!have[static_cast<size_t>(i)])
      throw std::runtime_error("missing source " + std::to_string(i));
  return Permutation(std::move(image));
}

inline void write_schedule(std::ostream& os, const SwapSchedule& s) {
  for (const auto& layer : s.layers) {
    for (size_t i = 0; i < layer.size(); ++i) {
      if (i) os << " ";
      os << layer[i].first << "-" << layer[i].second;
    }
    os << "\n";
  }
}

inline SwapSchedule parse_schedule(std::istream& in) {
  SwapSchedule s;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::istringstream ls(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::vector<std::pair<int, int>> layer;
    std::string tok;
    while (ls >> tok) {
      const auto dash = tok.find('-');
      if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'u-v'");
      try {
        size_t used_u = 0, used_v = 0;
        const int u = std::stoi(tok.substr(0, dash), &used_u);
        const int v = std::stoi(tok.substr(dash + 1), &used_v);
        if (used_u != dash || used_v != tok.size() - dash - 1)
          throw std::invalid_argument("");
        layer.emplace_back(u, v);
      } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'u-v'");
      }
    }
    if (!layer.empty()) s.layers.push_back(std::move(layer));
  }
  return s;
}

inline void write_report(std::ostream& os, const PermutationReport& r) {
  os << "depth=" << r.depth << "\n"
     << "swaps=" << r.swaps << "\n"
     << "bound_depth=" << r.bound_depth << "\n"
     << "bound_swaps=" << r.bound_swaps << "\n";
}

}  // namespace qroute
