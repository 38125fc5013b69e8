#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "topology.hpp"

/// Column-routing multigraph and its decomposition into perfect matchings.
/// Sides are the device columns (1-based); one edge per qubit runs from its
/// origin column to its destination column, tagged with the qubit id so
/// parallel edges stay distinct. A k-regular instance splits into exactly k
/// perfect matchings, extracted one at a time by unit-capacity augmenting
/// paths scanned in ascending (left, right, payload) order.

namespace qroute {

struct BipartiteMultigraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::array<int, 3>> edges;  // {left, right, payload}
};

struct Matching {
  std::vector<std::array<int, 3>> edges;  // one per left node, sorted by left
};

/// One edge per qubit from its origin column to its destination column,
/// payload = start node, ordered by (origin column, ypos). Each column of a
/// device with K nodes per column gives a K-regular multigraph.
inline BipartiteMultigraph build_routing_graph(const LayoutSpec& s, const Permutation& p) {
  if (s.kind == LayoutKind::Linear)
    throw std::invalid_argument("column routing graph requires a 2d layout");
  if (p.size() != s.node_count())
    throw std::invalid_argument("permutation size does not match layout");
  BipartiteMultigraph g;
  g.left_count = g.right_count = s.column_count();
  g.edges.reserve(static_cast<size_t>(s.node_count()));
  for (int c = 1; c <= s.column_count(); ++c)
    for (int y = 1; y <= s.column_length(); ++y) {
      const int node = node_at_column(s, c, y);
      g.edges.push_back({c, column_position(s, p[node]).first, node});
    }
  return g;
}

namespace detail {

class MatchingExtractor {
 public:
  explicit MatchingExtractor(const BipartiteMultigraph& g) : g_(g) {
    if (g.left_count < 1 || g.right_count < 1)
      throw std::invalid_argument("empty multigraph side");
    order_.resize(g.edges.size());
    for (size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](size_t a, size_t b) {
      return g.edges[a] < g.edges[b];
    });
    adj_.resize(static_cast<size_t>(g.left_count) + 1);
    alive_.assign(g.edges.size(), true);
    std::vector<long long> dl(static_cast<size_t>(g.left_count) + 1, 0);
    std::vector<long long> dr(static_cast<size_t>(g.right_count) + 1, 0);
    for (size_t i : order_) {
      const auto& [l, r, payload] = g.edges[i];
      if (l < 1 || l > g.left_count || r < 1 || r > g.right_count)
        throw std::invalid_argument("edge endpoint out of range");
      adj_[static_cast<size_t>(l)].push_back(i);
      ++dl[static_cast<size_t>(l)];
      ++dr[static_cast<size_t>(r)];
    }
    degree_ = g.edges.empty() ? 0 : dl[1];
    for (int l = 1; l <= g.left_count; ++l)
      if (dl[static_cast<size_t>(l)] != degree_)
        throw std::invalid_argument("irregular multigraph: left degrees differ");
    for (int r = 1; r <= g.right_count; ++r)
      if (dr[static_cast<size_t>(r)] != degree_)
        throw std::invalid_argument("irregular multigraph: right degrees differ");
  }

  [[nodiscard]] long long degree() const { return degree_; }

  /// Extracts one perfect matching and removes its edges.
  Matching extract() {
    match_right_.assign(static_cast<size_t>(g_.right_count) + 1, SIZE_MAX);
    match_left_.assign(static_cast<size_t>(g_.left_count) + 1, SIZE_MAX);
    for (int l = 1; l <= g_.left_count; ++l) {
      visited_.assign(static_cast<size_t>(g_.right_count) + 1, false);
      if (!augment(l))
        throw std::logic_error("regular multigraph without perfect matching");
    }
    Matching m;
    for (int l = 1; l <= g_.left_count; ++l) {
      const size_t e = match_left_[static_cast<size_t>(l)];
      m.edges.push_back(g_.edges[e]);
      alive_[e] = false;
    }
    return m;
  }

 private:
  bool augment(int l) {
    for (size_t e : adj_[static_cast<size_t>(l)]) {
      if (!alive_[e]) continue;
      const int r = g_.edges[e][1];
      if (visited_[static_cast<size_t>(r)]) continue;
      visited_[static_cast<size_t>(r)] = true;
      const size_t old = match_right_[static_cast<size_t>(r)];
      if (old == SIZE_MAX || augment(g_.edges[old][0])) {
        match_right_[static_cast<size_t>(r)] = e;
        match_left_[static_cast<size_t>(l)] = e;
        return true;
      }
    }
    return false;
  }

  const BipartiteMultigraph& g_;
  std::vector<size_t> order_;
  std::vector<std::vector<size_t>> adj_;  // edge indices, ascending (r, payload)
  std::vector<bool> alive_;
  std::vector<size_t> match_right_, match_left_;
  std::vector<bool> visited_;
  long long degree_ = 0;
};

}  // namespace detail

/// Splits a k-regular bipartite multigraph into k perfect matchings whose
/// union is exactly the input edge multiset. Irregular input is rejected.
inline std::vector<Matching> decompose_matchings(const BipartiteMultigraph& g) {
  detail::MatchingExtractor ex(g);
  std::vector<Matching> out;
  out.reserve(static_cast<size_t>(ex.degree()));
  for (long long y = 0; y < ex.degree(); ++y) out.push_back(ex.extract());
  return out;
}

/// One line per matching: "matching y: (l,r,qubit) ...".
inline std::string dump_matchings(const std::vector<Matching>& ms) {
  std::ostringstream os;
  for (size_t y = 0; y < ms.size(); ++y) {
    os << "matching " << y + 1 << ":";
    for (const auto& [l, r, payload] : ms[y].edges)
      os << " (" << l << "," << r << "," << payload << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace qroute
