// Command line front end: topology export, distance statistics and sweeps,
// routing of circuits and permutations, schedule verification, and the
// two-spin spectrum and shuttle-time estimates.
//
// Output is byte-stable for fixed arguments and seed. Randomized sweeps use
// the library's seeded generator; every row derives its stream from the
// global seed and the row index, so row sets can be reproduced point-wise.

#include "CLI11.hpp"

#include "qroute/matching.hpp"
#include "qroute/metrics.hpp"
#include "qroute/pairwise.hpp"
#include "qroute/physics.hpp"
#include "qroute/rng.hpp"
#include "qroute/routing.hpp"
#include "qroute/topology.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qroute;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string fmt(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

LayoutSpec layout_from_args(const std::string& kind, const std::vector<int>& dims) {
  const auto want = [&](size_t n, const char* usage) {
    if (dims.size() != n)
      throw CLI::ValidationError("layout", std::string("expected ") + usage);
  };
  if (kind == "linear") {
    want(1, "linear N");
    return LayoutSpec::linear(dims[0]);
  }
  if (kind == "rect" || kind == "rectangular") {
    want(2, "rect LX LY");
    return LayoutSpec::rectangular(dims[0], dims[1]);
  }
  if (kind == "sparse") {
    want(3, "sparse M DX DY");
    return LayoutSpec::sparse(dims[0], dims[1], dims[2]);
  }
  throw CLI::ValidationError("layout", "unknown layout kind '" + kind + "'");
}

/// stdout unless --out was given.
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ostream& report_stream(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cerr;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open report file " + path);
  return file;
}

struct DistanceRow {
  std::string kind, params;
  long long n = 0;
  std::optional<BigRat> mean_closed;
  BigRat mean_bfs;
  std::optional<long long> max_closed;
  long long max_bfs = 0;
};

constexpr const char* kDistanceHeader =
    "layout,params,n,mean_closed,mean_closed_float,mean_bfs,mean_bfs_float,"
    "max_closed,max_bfs";

DistanceRow distance_row(const LayoutSpec& spec) {
  DistanceRow row;
  row.kind = spec.kind_name();
  row.params = spec.params_label();
  row.n = spec.node_count();
  switch (spec.kind) {
    case LayoutKind::Linear:
      row.mean_closed = mean_linear_closed(spec.n);
      row.max_closed = max_linear_closed(spec.n);
      break;
    case LayoutKind::Rectangular:
      row.mean_closed = mean_rect_closed(spec.lx, spec.ly);
      row.max_closed = max_rect_closed(spec.lx, spec.ly);
      break;
    case LayoutKind::Sparse:
      row.mean_closed = mean_sparse_closed(spec.m, spec.dx, spec.dy);
      if (spec.dx == spec.dy) row.max_closed = max_sparse_closed(spec.m, spec.dx, spec.dy);
      break;
  }
  const auto st = stats_bruteforce(HardwareGraph(spec));
  row.mean_bfs = st.mean;
  row.max_bfs = st.max;
  if (row.mean_closed && *row.mean_closed != row.mean_bfs)
    throw std::runtime_error("closed-form mean disagrees with brute force for " +
                             row.kind + " " + row.params);
  if (row.max_closed && *row.max_closed != row.max_bfs)
    throw std::runtime_error("closed-form max disagrees with brute force for " +
                             row.kind + " " + row.params);
  return row;
}

void print_distance_row(std::ostream& os, const DistanceRow& r) {
  os << r.kind << "," << r.params << "," << r.n << ","
     << (r.mean_closed ? fmt(*r.mean_closed) : "-") << ","
     << (r.mean_closed ? fmt(to_double(*r.mean_closed)) : "-") << ","
     << fmt(r.mean_bfs) << "," << fmt(to_double(r.mean_bfs)) << ","
     << (r.max_closed ? std::to_string(*r.max_closed) : "-") << ","
     << r.max_bfs << "\n";
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  return parse_circuit(in);
}

Permutation read_permutation_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open permutation file " + path);
  return parse_permutation(in, n);
}

SwapSchedule read_schedule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schedule file " + path);
  return parse_schedule(in);
}

RoutedPermutation route_any(const HardwareGraph& g, const Permutation& p, bool single_line) {
  if (single_line) return route_single_square(g, p);
  switch (g.layout().kind) {
    case LayoutKind::Linear: return route_linear(g, p);
    case LayoutKind::Rectangular: return route_rectangular(g, p);
    case LayoutKind::Sparse: return route_sparse(g, p);
  }
  throw std::logic_error("bad layout kind");
}

struct DepthRow {
  std::string kind;
  LayoutSpec spec;
  bool single_line = false;
};

int run_sweep_depth(std::ostream& os, const std::vector<DepthRow>& rows, int trials,
                    std::uint64_t seed) {
  os << "layout,params,n,trials,bound_depth,max_depth,bound_swaps,max_swaps\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const HardwareGraph g(row.spec);
    SeededRng rng(seed + 1000003 * (i + 1));
    int max_depth = 0;
    long long max_swaps = 0;
    int bound_depth = 0;
    long long bound_swaps = 0;
    for (int t = 0; t < trials; ++t) {
      const Permutation p = random_permutation(rng, g.node_count());
      const RoutedPermutation r = route_any(g, p, row.single_line);
      const VerifyResult v = verify_schedule(g, r.schedule, p);
      if (!v.ok) throw std::runtime_error("schedule verification failed: " + v.message);
      if (r.report.depth > r.report.bound_depth || r.report.swaps > r.report.bound_swaps)
        throw std::runtime_error("routing bound violated for " + row.kind + " " +
                                 row.spec.params_label());
      max_depth = std::max(max_depth, r.report.depth);
      max_swaps = std::max(max_swaps, r.report.swaps);
      bound_depth = r.report.bound_depth;
      bound_swaps = r.report.bound_swaps;
    }
    os << row.kind << "," << row.spec.params_label() << "," << g.node_count() << ","
       << trials << "," << bound_depth << "," << max_depth << "," << bound_swaps << ","
       << max_swaps << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Routing and topology toolkit for sparse qubit grids"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  int trials = 50;
  std::string out_path;
  app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();
  app.add_option("--trials", trials, "trials per randomized sweep point")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  std::string kind;
  std::vector<int> dims;
  const auto add_layout = [&](CLI::App* cmd) {
    cmd->add_option("kind", kind, "layout kind: linear | rect | sparse")->required();
    cmd->add_option("dims", dims, "layout parameters (N | LX LY | M DX DY)");
  };

  auto* topo = app.add_subcommand("topo", "export the coupling graph as an edge list");
  add_layout(topo);

  auto* distances =
      app.add_subcommand("distances", "distance statistics for one layout (CSV)");
  add_layout(distances);

  auto* sweep_dist = app.add_subcommand(
      "sweep-dist", "distance statistics across layout families (CSV)");
  std::vector<int> m_list{4, 8, 16};
  std::vector<int> d_list{1, 2, 3, 4};
  std::vector<int> linear_list;
  std::vector<int> square_list{4, 8, 16, 32};
  sweep_dist->add_option("--m-list", m_list, "segment sizes for sparse points")
      ->capture_default_str();
  sweep_dist->add_option("--d-list", d_list, "square-grid extents for sparse points")
      ->capture_default_str();
  sweep_dist->add_option("--linear-list", linear_list,
                         "chain lengths (default: the sparse qubit counts)");
  sweep_dist->add_option("--square-list", square_list, "grid side lengths")
      ->capture_default_str();

  auto* sweep_depth = app.add_subcommand(
      "sweep-depth", "routing depth bounds vs measured worst case (CSV)");
  std::vector<int> sd_m_list{4, 8, 16};
  std::vector<int> sd_d_list{1, 2, 3};
  std::vector<int> sd_linear_list{16, 64, 256};
  std::vector<int> sd_square_list{4, 8, 16};
  sweep_depth->add_option("--m-list", sd_m_list, "segment sizes for sparse points")
      ->capture_default_str();
  sweep_depth->add_option("--d-list", sd_d_list, "square-grid extents for sparse points")
      ->capture_default_str();
  sweep_depth->add_option("--linear-list", sd_linear_list, "chain lengths")
      ->capture_default_str();
  sweep_depth->add_option("--square-list", sd_square_list, "grid side lengths")
      ->capture_default_str();

  auto* route_pw = app.add_subcommand(
      "route-pairwise", "compile a circuit gate by gate with swap chains");
  std::string circuit_path, report_path;
  add_layout(route_pw);
  route_pw->add_option("--circuit", circuit_path, "circuit file")->required();
  route_pw->add_option("--report", report_path, "write the report here (default stderr)");

  auto* route_perm =
      app.add_subcommand("route-perm", "emit a swap schedule realizing a permutation");
  std::string perm_path;
  bool single_line = false;
  add_layout(route_perm);
  route_perm->add_option("--perm", perm_path, "permutation file")->required();
  route_perm->add_flag("--single-line", single_line,
                       "route a one-square device along its Hamiltonian line");
  route_perm->add_option("--report", report_path, "write the report here (default stderr)");

  auto* verify = app.add_subcommand("verify", "check a schedule against a permutation");
  std::string schedule_path;
  add_layout(verify);
  verify->add_option("--perm", perm_path, "permutation file")->required();
  verify->add_option("--schedule", schedule_path, "schedule file")->required();

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "two-spin spectrum along a detuning sweep (CSV)");
  double ts = 5e10, zav = -1, zd = -1, from = -10, to = 10;
  int points = 1000;
  spectrum_cmd->add_option("--ts", ts, "tunnel coupling in Hz")->capture_default_str();
  spectrum_cmd->add_option("--zav", zav, "average Zeeman splitting in Hz (default 3*ts)");
  spectrum_cmd->add_option("--zd", zd, "Zeeman difference in Hz (default 0.05*zav)");
  spectrum_cmd->add_option("--from", from, "sweep start, eps/ts")->capture_default_str();
  spectrum_cmd->add_option("--to", to, "sweep end, eps/ts")->capture_default_str();
  spectrum_cmd->add_option("--points", points, "sample count")->capture_default_str();

  auto* shuttle_cmd =
      app.add_subcommand("shuttle", "shuttle time for a target leakage probability");
  double p_target = 1e-4, amplitude_factor = 4.0;
  int steps = 6;
  shuttle_cmd->add_option("--ts", ts, "tunnel coupling in Hz")->capture_default_str();
  shuttle_cmd->add_option("--p", p_target, "leakage probability target")
      ->capture_default_str();
  shuttle_cmd->add_option("--steps", steps, "hops per relay step")->capture_default_str();
  shuttle_cmd->add_option("--amplitude-factor", amplitude_factor,
                          "ramp amplitude in units of the gap 2*ts")
      ->capture_default_str();

  // Global options (--seed, --trials, --out) may follow the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    OutStream out(out_path);
    std::ostream& os = out.get();

    if (topo->parsed()) {
      write_edge_list(os, HardwareGraph(layout_from_args(kind, dims)));
      return 0;
    }

    if (distances->parsed()) {
      os << kDistanceHeader << "\n";
      print_distance_row(os, distance_row(layout_from_args(kind, dims)));
      return 0;
    }

    if (sweep_dist->parsed()) {
      std::set<int> chain_lengths(linear_list.begin(), linear_list.end());
      if (linear_list.empty())
        for (int m : m_list)
          for (int d : d_list) chain_lengths.insert(4 * m * d * d);
      os << kDistanceHeader << "\n";
      for (int n : chain_lengths)
        print_distance_row(os, distance_row(LayoutSpec::linear(n)));
      for (int side : square_list)
        print_distance_row(os, distance_row(LayoutSpec::rectangular(side, side)));
      for (int m : m_list)
        for (int d : d_list)
          print_distance_row(os, distance_row(LayoutSpec::sparse(m, d, d)));
      return 0;
    }

    if (sweep_depth->parsed()) {
      std::vector<DepthRow> rows;
      for (int n : sd_linear_list) rows.push_back({"linear", LayoutSpec::linear(n), false});
      for (int side : sd_square_list)
        rows.push_back({"rect", LayoutSpec::rectangular(side, side), false});
      for (int m : sd_m_list)
        for (int d : sd_d_list) rows.push_back({"sparse", LayoutSpec::sparse(m, d, d), false});
      for (int m : sd_m_list)
        rows.push_back({"square-line", LayoutSpec::sparse(m, 1, 1), true});
      return run_sweep_depth(os, rows, trials, seed);
    }

    if (route_pw->parsed()) {
      const HardwareGraph g(layout_from_args(kind, dims));
      const PairwiseResult r = compile_pairwise(g, read_circuit_file(circuit_path));
      write_compiled(os, r);
      std::ofstream report_file;
      std::ostream& rs = report_stream(report_file, report_path);
      rs << "gates=" << r.report.gates.size() << "\n"
         << "total_distance=" << r.report.total_distance << "\n"
         << "total_swaps_one_way=" << r.report.total_swaps_one_way << "\n"
         << "total_depth_added=" << r.report.total_depth_added << "\n"
         << "total_swaps_round_trip=" << r.report.total_swaps_round_trip << "\n"
         << "sqrt_swap_factor=" << PairwiseReport::sqrt_swap_factor << "\n";
      return 0;
    }

    if (route_perm->parsed()) {
      const HardwareGraph g(layout_from_args(kind, dims));
      const Permutation p = read_permutation_file(perm_path, g.node_count());
      const RoutedPermutation r = route_any(g, p, single_line);
      const VerifyResult v = verify_schedule(g, r.schedule, p);
      if (!v.ok) throw std::runtime_error("schedule verification failed: " + v.message);
      if (r.report.depth > r.report.bound_depth || r.report.swaps > r.report.bound_swaps)
        throw std::runtime_error("routing bound violated");
      write_schedule(os, r.schedule);
      std::ofstream report_file;
      write_report(report_stream(report_file, report_path), r.report);
      return 0;
    }

    if (verify->parsed()) {
      const HardwareGraph g(layout_from_args(kind, dims));
      const Permutation p = read_permutation_file(perm_path, g.node_count());
      const VerifyResult v = verify_schedule(g, read_schedule_file(schedule_path), p);
      os << v.message << "\n";
      return v.ok ? 0 : 1;
    }

    if (spectrum_cmd->parsed()) {
      if (zav < 0) zav = 3 * ts;
      if (zd < 0) zd = 0.05 * zav;
      os << "eps_over_ts,e1,e2,e3,e4,e5\n";
      for (const SpectrumPoint& pt : spectrum(ts, zav, zd, from, to, points)) {
        os << fmt(pt.eps_over_ts);
        for (double e : pt.levels) os << "," << fmt(e);
        os << "\n";
      }
      return 0;
    }

    if (shuttle_cmd->parsed()) {
      const ShuttleEstimate e = shuttle_time(ts, p_target, amplitude_factor, steps);
      os << "t_s=" << fmt(e.t_s) << "\n"
         << "p_target=" << fmt(e.p_target) << "\n"
         << "amplitude_factor=" << fmt(e.amplitude_factor) << "\n"
         << "v=" << fmt(e.v) << "\n"
         << "t_sh=" << fmt(e.t_sh) << "\n"
         << "T_sh=" << fmt(e.T_sh) << "\n"
         << "steps=" << e.steps << "\n";
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
