#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

/// Hardware connectivity graphs for three qubit layouts:
///
///  * linear:      a chain of n qubits, nearest-neighbour coupling.
///  * rectangular: an lx-by-ly grid, nearest-neighbour coupling.
///  * sparse:      a dx-by-dy tiling of diagonally oriented squares. Each
///    square consists of four nanowire segments (NW, NE, SW, SE) holding m
///    qubits each, so the device has N = 4*m*dx*dy qubits. Neighbouring
///    squares touch corner to corner; at every corner junction the terminal
///    qubits of all incident segments (two on the perimeter, four in the
///    interior) are pairwise coupled, forming a clique.
///
/// Sparse addressing conventions (all 1-based):
///
///  * Squares are indexed (ax, ay) with ax in 1..dx left to right and ay in
///    1..dy top to bottom. Node ids enumerate squares row-major (ay outer,
///    ax inner), segments in the fixed order NW, NE, SW, SE, and qubits
///    1..m starting from the upper corner of each segment.
///  * Generalized column c in 1..2*dx is the zigzag path through the west
///    (odd c) or east (even c) segments of square column ceil(c/2), ordered
///    top to bottom; it holds 2*m*dy qubits.
///  * Generalized row r in 1..2*dy is the zigzag path through the north
///    (odd r) or south (even r) segments of square row ceil(r/2), ordered
///    left to right; it holds 2*m*dx qubits.
///
/// Every node lies on exactly one generalized column and one generalized
/// row, and a row and column of the same square share exactly m nodes.

namespace qroute {

enum class LayoutKind { Linear, Rectangular, Sparse };

/// Segment position on a tilted square. The enumerator order fixes the
/// canonical node numbering and must not change.
enum class Edge : int { NW = 0, NE = 1, SW = 2, SE = 3 };

inline const char* edge_name(Edge e) {
  switch (e) {
    case Edge::NW: return "NW";
    case Edge::NE: return "NE";
    case Edge::SW: return "SW";
    case Edge::SE: return "SE";
  }
  throw std::invalid_argument("bad edge enumerator");
}

struct LayoutSpec {
  LayoutKind kind = LayoutKind::Linear;
  int n = 0;             // linear: chain length
  int lx = 0, ly = 0;    // rectangular: grid extents
  int m = 0, dx = 0, dy = 0;  // sparse: qubits per segment, squares per row/column

  static LayoutSpec linear(int n) {
    if (n < 1) throw std::invalid_argument("linear layout requires n >= 1");
    LayoutSpec s;
    s.kind = LayoutKind::Linear;
    s.n = n;
    return s;
  }

  static LayoutSpec rectangular(int lx, int ly) {
    if (lx < 1 || ly < 1)
      throw std::invalid_argument("rectangular layout requires lx, ly >= 1");
    LayoutSpec s;
    s.kind = LayoutKind::Rectangular;
    s.lx = lx;
    s.ly = ly;
    return s;
  }

  static LayoutSpec sparse(int m, int dx, int dy) {
    if (m < 1 || dx < 1 || dy < 1)
      throw std::invalid_argument("sparse layout requires m, dx, dy >= 1");
    LayoutSpec s;
    s.kind = LayoutKind::Sparse;
    s.m = m;
    s.dx = dx;
    s.dy = dy;
    return s;
  }

  [[nodiscard]] int node_count() const {
    switch (kind) {
      case LayoutKind::Linear: return n;
      case LayoutKind::Rectangular: return lx * ly;
      case LayoutKind::Sparse: return 4 * m * dx * dy;
    }
    throw std::logic_error("bad layout kind");
  }

  /// Number of (generalized) columns; undefined for linear layouts.
  [[nodiscard]] int column_count() const {
    if (kind == LayoutKind::Rectangular) return lx;
    if (kind == LayoutKind::Sparse) return 2 * dx;
    throw std::invalid_argument("linear layouts have no columns");
  }

  [[nodiscard]] int row_count() const {
    if (kind == LayoutKind::Rectangular) return ly;
    if (kind == LayoutKind::Sparse) return 2 * dy;
    throw std::invalid_argument("linear layouts have no rows");
  }

  /// Nodes per (generalized) column.
  [[nodiscard]] int column_length() const {
    if (kind == LayoutKind::Rectangular) return ly;
    if (kind == LayoutKind::Sparse) return 2 * m * dy;
    throw std::invalid_argument("linear layouts have no columns");
  }

  [[nodiscard]] int row_length() const {
    if (kind == LayoutKind::Rectangular) return lx;
    if (kind == LayoutKind::Sparse) return 2 * m * dx;
    throw std::invalid_argument("linear layouts have no rows");
  }

  [[nodiscard]] std::string kind_name() const {
    switch (kind) {
      case LayoutKind::Linear: return "linear";
      case LayoutKind::Rectangular: return "rect";
      case LayoutKind::Sparse: return "sparse";
    }
    throw std::logic_error("bad layout kind");
  }

  [[nodiscard]] std::string params_label() const {
    switch (kind) {
      case LayoutKind::Linear: return std::to_string(n);
      case LayoutKind::Rectangular:
        return std::to_string(lx) + "x" + std::to_string(ly);
      case LayoutKind::Sparse:
        return std::to_string(m) + "x" + std::to_string(dx) + "x" +
               std::to_string(dy);
    }
    throw std::logic_error("bad layout kind");
  }
};

/// Full address of a sparse-layout node: square form, column form and row
/// form describe the same physical qubit.
struct QubitAddress {
  int ax = 0, ay = 0;  // square coordinates, 1..dx and 1..dy
  Edge edge = Edge::NW;
  int index = 0;  // 1..m from the upper corner of the segment
  int col = 0;    // generalized column, 1..2*dx
  int ypos = 0;   // position along the column, 1..2*m*dy, top to bottom
  int row = 0;    // generalized row, 1..2*dy
  int xpos = 0;   // position along the row, 1..2*m*dx, left to right
};

namespace detail {

inline void require_sparse(const LayoutSpec& s) {
  if (s.kind != LayoutKind::Sparse)
    throw std::invalid_argument("operation requires a sparse layout");
}

inline int sparse_node_id(const LayoutSpec& s, int ax, int ay, Edge e, int index) {
  return (((ay - 1) * s.dx + (ax - 1)) * 4 + static_cast<int>(e)) * s.m +
         (index - 1);
}

}  // namespace detail

/// Decodes a sparse node id into all three address forms.
inline QubitAddress address_of(const LayoutSpec& s, int node) {
  detail::require_sparse(s);
  if (node < 0 || node >= s.node_count())
    throw std::out_of_range("node id out of range");
  QubitAddress a;
  a.index = node % s.m + 1;
  int rest = node / s.m;
  a.edge = static_cast<Edge>(rest % 4);
  rest /= 4;
  a.ax = rest % s.dx + 1;
  a.ay = rest / s.dx + 1;

  const bool west = (a.edge == Edge::NW || a.edge == Edge::SW);
  const bool north = (a.edge == Edge::NW || a.edge == Edge::NE);
  a.col = 2 * (a.ax - 1) + (west ? 1 : 2);
  a.ypos = (a.ay - 1) * 2 * s.m + (north ? a.index : s.m + a.index);
  a.row = 2 * (a.ay - 1) + (north ? 1 : 2);
  switch (a.edge) {
    case Edge::NW: a.xpos = (a.ax - 1) * 2 * s.m + (s.m - a.index + 1); break;
    case Edge::NE: a.xpos = (a.ax - 1) * 2 * s.m + s.m + a.index; break;
    case Edge::SW: a.xpos = (a.ax - 1) * 2 * s.m + a.index; break;
    case Edge::SE: a.xpos = (a.ax - 1) * 2 * s.m + 2 * s.m - a.index + 1; break;
  }
  return a;
}

/// Inverse of address_of for the square form.
inline int node_at(const LayoutSpec& s, int ax, int ay, Edge edge, int index) {
  detail::require_sparse(s);
  if (ax < 1 || ax > s.dx || ay < 1 || ay > s.dy)
    throw std::out_of_range("square coordinates out of range");
  if (index < 1 || index > s.m) throw std::out_of_range("segment index out of range");
  return detail::sparse_node_id(s, ax, ay, edge, index);
}

/// Node at (column, ypos); works for rectangular and sparse layouts.
inline int node_at_column(const LayoutSpec& s, int col, int ypos) {
  if (col < 1 || col > s.column_count())
    throw std::out_of_range("column index out of range");
  if (ypos < 1 || ypos > s.column_length())
    throw std::out_of_range("column position out of range");
  if (s.kind == LayoutKind::Rectangular) return (ypos - 1) * s.lx + (col - 1);
  const int ax = (col + 1) / 2;
  const bool west = (col % 2 == 1);
  const int ay = (ypos - 1) / (2 * s.m) + 1;
  const int off = ypos - (ay - 1) * 2 * s.m;
  const Edge e = off <= s.m ? (west ? Edge::NW : Edge::NE)
                            : (west ? Edge::SW : Edge::SE);
  const int index = off <= s.m ? off : off - s.m;
  return detail::sparse_node_id(s, ax, ay, e, index);
}

/// Node at (row, xpos); works for rectangular and sparse layouts.
inline int node_at_row(const LayoutSpec& s, int row, int xpos) {
  if (row < 1 || row > s.row_count())
    throw std::out_of_range("row index out of range");
  if (xpos < 1 || xpos > s.row_length())
    throw std::out_of_range("row position out of range");
  if (s.kind == LayoutKind::Rectangular) return (row - 1) * s.lx + (xpos - 1);
  const int ay = (row + 1) / 2;
  const bool north = (row % 2 == 1);
  const int ax = (xpos - 1) / (2 * s.m) + 1;
  const int off = xpos - (ax - 1) * 2 * s.m;
  Edge e;
  int index;
  if (north) {
    // West segment traversed downward-to-upward, east segment onward.
    if (off <= s.m) { e = Edge::NW; index = s.m - off + 1; }
    else            { e = Edge::NE; index = off - s.m; }
  } else {
    if (off <= s.m) { e = Edge::SW; index = off; }
    else            { e = Edge::SE; index = 2 * s.m - off + 1; }
  }
  return detail::sparse_node_id(s, ax, ay, e, index);
}

/// (column, ypos) of a node; works for rectangular and sparse layouts.
inline std::pair<int, int> column_position(const LayoutSpec& s, int node) {
  if (node < 0 || node >= s.node_count())
    throw std::out_of_range("node id out of range");
  if (s.kind == LayoutKind::Rectangular)
    return {node % s.lx + 1, node / s.lx + 1};
  const QubitAddress a = address_of(s, node);
  return {a.col, a.ypos};
}

/// (row, xpos) of a node; works for rectangular and sparse layouts.
inline std::pair<int, int> row_position(const LayoutSpec& s, int node) {
  if (node < 0 || node >= s.node_count())
    throw std::out_of_range("node id out of range");
  if (s.kind == LayoutKind::Rectangular)
    return {node / s.lx + 1, node % s.lx + 1};
  const QubitAddress a = address_of(s, node);
  return {a.row, a.xpos};
}

/// Nodes of one (generalized) column, ordered top to bottom. The list is a
/// simple path in the hardware graph.
inline std::vector<int> column_path(const LayoutSpec& s, int col) {
  std::vector<int> path;
  path.reserve(s.column_length());
  for (int y = 1; y <= s.column_length(); ++y)
    path.push_back(node_at_column(s, col, y));
  return path;
}

/// Nodes of one (generalized) row, ordered left to right; a simple path.
inline std::vector<int> row_path(const LayoutSpec& s, int row) {
  std::vector<int> path;
  path.reserve(s.row_length());
  for (int x = 1; x <= s.row_length(); ++x)
    path.push_back(node_at_row(s, row, x));
  return path;
}

/// Hamiltonian path through the 4m-cycle of a one-square device (dx=dy=1),
/// used to rearrange such a device with a single neighbour sort.
inline std::vector<int> single_square_line(const LayoutSpec& s) {
  detail::require_sparse(s);
  if (s.dx != 1 || s.dy != 1)
    throw std::invalid_argument("single-square line requires dx = dy = 1");
  std::vector<int> line;
  line.reserve(4 * s.m);
  for (int i = 1; i <= s.m; ++i) line.push_back(node_at(s, 1, 1, Edge::NW, i));
  for (int i = 1; i <= s.m; ++i) line.push_back(node_at(s, 1, 1, Edge::SW, i));
  for (int i = s.m; i >= 1; --i) line.push_back(node_at(s, 1, 1, Edge::SE, i));
  for (int i = s.m; i >= 1; --i) line.push_back(node_at(s, 1, 1, Edge::NE, i));
  return line;
}

/// Planar position of a sparse node, doubled so that coordinates stay
/// integral (segments run diagonally). x grows rightward, y downward.
inline std::pair<int, int> node_position(const LayoutSpec& s, int node) {
  const QubitAddress a = address_of(s, node);
  const int m = s.m;
  const int k = 2 * a.index - 1;
  switch (a.edge) {
    case Edge::NW: return {4 * m * a.ax - k, 4 * m * a.ay - 2 * m + k};
    case Edge::NE: return {4 * m * a.ax + k, 4 * m * a.ay - 2 * m + k};
    case Edge::SW: return {4 * m * a.ax - 2 * m + k, 4 * m * a.ay + k};
    case Edge::SE: return {4 * m * a.ax + 2 * m - k, 4 * m * a.ay + k};
  }
  throw std::logic_error("bad edge enumerator");
}

/// Undirected coupling graph of a device. Immutable once built.
class HardwareGraph {
 public:
  explicit HardwareGraph(const LayoutSpec& spec)
      : spec_(spec), n_(spec.node_count()), adj_(static_cast<size_t>(n_)) {
    std::set<std::pair<int, int>> es;
    switch (spec.kind) {
      case LayoutKind::Linear:
        for (int i = 0; i + 1 < n_; ++i) es.emplace(i, i + 1);
        break;
      case LayoutKind::Rectangular:
        for (int y = 0; y < spec.ly; ++y)
          for (int x = 0; x < spec.lx; ++x) {
            const int v = y * spec.lx + x;
            if (x + 1 < spec.lx) es.emplace(v, v + 1);
            if (y + 1 < spec.ly) es.emplace(v, v + spec.lx);
          }
        break;
      case LayoutKind::Sparse:
        build_sparse_edges(es);
        break;
    }
    edges_.assign(es.begin(), es.end());
    for (const auto& [u, v] : edges_) {
      adj_[static_cast<size_t>(u)].push_back(v);
      adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  [[nodiscard]] int node_count() const { return n_; }
  [[nodiscard]] const LayoutSpec& layout() const { return spec_; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  [[nodiscard]] const std::vector<int>& neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("node id out of range");
    return adj_[static_cast<size_t>(v)];
  }

  [[nodiscard]] bool has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::out_of_range("node id out of range");
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  void build_sparse_edges(std::set<std::pair<int, int>>& es) {
    const int m = spec_.m;
    // Junction key: (0, j, ay) sits between square columns j and j+1 of
    // square row ay; (1, ax, i) sits between square rows i and i+1 of
    // square column ax. j = 0/dx and i = 0/dy are the device perimeter.
    std::map<std::tuple<int, int, int>, std::vector<int>> junctions;
    for (int ay = 1; ay <= spec_.dy; ++ay)
      for (int ax = 1; ax <= spec_.dx; ++ax) {
        const auto id = [&](Edge e, int i) {
          return detail::sparse_node_id(spec_, ax, ay, e, i);
        };
        for (Edge e : {Edge::NW, Edge::NE, Edge::SW, Edge::SE})
          for (int i = 1; i < m; ++i) {
            es.emplace(std::min(id(e, i), id(e, i + 1)),
                       std::max(id(e, i), id(e, i + 1)));
          }
        auto& top = junctions[{1, ax, ay - 1}];
        top.push_back(id(Edge::NW, 1));
        top.push_back(id(Edge::NE, 1));
        auto& bottom = junctions[{1, ax, ay}];
        bottom.push_back(id(Edge::SW, m));
        bottom.push_back(id(Edge::SE, m));
        auto& left = junctions[{0, ax - 1, ay}];
        left.push_back(id(Edge::NW, m));
        left.push_back(id(Edge::SW, 1));
        auto& right = junctions[{0, ax, ay}];
        right.push_back(id(Edge::NE, m));
        right.push_back(id(Edge::SE, 1));
      }
    for (const auto& [key, terms] : junctions)
      for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j)
          es.emplace(std::min(terms[i], terms[j]), std::max(terms[i], terms[j]));
  }

  LayoutSpec spec_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

inline HardwareGraph build_linear(int n) {
  return HardwareGraph(LayoutSpec::linear(n));
}

inline HardwareGraph build_rectangular(int lx, int ly) {
  return HardwareGraph(LayoutSpec::rectangular(lx, ly));
}

inline HardwareGraph build_sparse(int m, int dx, int dy) {
  return HardwareGraph(LayoutSpec::sparse(m, dx, dy));
}

/// Plain-text edge list: header "nodes N", then one "u v" line per edge in
/// ascending order.
inline void write_edge_list(std::ostream& os, const HardwareGraph& g) {
  os << "nodes " << g.node_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
}

}  // namespace qroute
