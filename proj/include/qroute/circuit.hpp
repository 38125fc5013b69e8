#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

/// Line-oriented circuit text format:
///
///   qubits N
///   g1 NAME q [param]
///   g2 NAME qa qb
///
/// '#' starts a comment (rest of line); blank lines are ignored.

namespace qroute {

struct Gate {
  std::string name;
  std::vector<int> operands;
  std::vector<double> params;

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int qubit_count = 0;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

namespace detail {

[[noreturn]] inline void parse_fail(int line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

inline std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::string fmt_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline Circuit parse_circuit(std::istream& in) {
  Circuit c;
  bool have_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(detail::strip_comment(raw));
    std::string tag;
    if (!(ls >> tag)) continue;
    if (!have_header) {
      if (tag != "qubits") detail::parse_fail(line_no, "expected 'qubits N' header");
      if (!(ls >> c.qubit_count) || c.qubit_count < 1)
        detail::parse_fail(line_no, "bad qubit count");
      have_header = true;
      continue;
    }
    Gate g;
    int arity = 0;
    if (tag == "g1") arity = 1;
    else if (tag == "g2") arity = 2;
    else detail::parse_fail(line_no, "unknown instruction tag '" + tag + "'");
    if (!(ls >> g.name)) detail::parse_fail(line_no, "missing gate name");
    for (int i = 0; i < arity; ++i) {
      int q;
      if (!(ls >> q)) detail::parse_fail(line_no, "missing operand");
      if (q < 0 || q >= c.qubit_count)
        detail::parse_fail(line_no, "operand out of range");
      g.operands.push_back(q);
    }
    if (arity == 2 && g.operands[0] == g.operands[1])
      detail::parse_fail(line_no, "two-qubit gate operands must be distinct");
    if (arity == 1) {
      double p;
      if (ls >> p) g.params.push_back(p);
    }
    std::string extra;
    if (ls >> extra) detail::parse_fail(line_no, "trailing tokens");
    c.gates.push_back(std::move(g));
  }
  if (!have_header) throw std::runtime_error("line 1: expected 'qubits N' header");
  return c;
}

inline void write_gate(std::ostream& os, const Gate& g) {
  os << (g.operands.size() == 1 ? "g1 " : "g2 ") << g.name;
  for (int q : g.operands) os << " " << q;
  for (double p : g.params) os << " " << detail::fmt_param(p);
  os << "\n";
}

inline void write_circuit(std::ostream& os, const Circuit& c) {
  os << "qubits " << c.qubit_count << "\n";
  for (const Gate& g : c.gates) write_gate(os, g);
}

}  // namespace qroute
