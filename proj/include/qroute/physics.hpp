#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

/// Two-spin model of a tunnel-coupled dot pair and the resulting shuttling
/// time scales. Energies are frequencies (Hz, i.e. E/h); detuning eps tilts
/// the double dot, t_s is the singlet tunnel coupling, z_av and z_d are the
/// average and difference Zeeman splittings of the two spins.
///
/// Basis order: up-up, down-up, up-down, down-down, doubly-occupied
/// singlet. Only the anti-parallel states couple to the singlet, with
/// amplitudes +t_s and -t_s; the parallel states stay uncoupled, so two
/// eigenvalues are exactly eps/2 +- z_av.

namespace qroute {

struct SpinPairParams {
  double eps = 0;
  double t_s = 0;
  double z_av = 0;
  double z_d = 0;
};

using Matrix5d = Eigen::Matrix<double, 5, 5>;

inline Matrix5d hamiltonian(const SpinPairParams& p) {
  Matrix5d h = Matrix5d::Zero();
  h(0, 0) = p.eps / 2 + p.z_av;
  h(1, 1) = p.eps / 2 + p.z_d / 2;
  h(2, 2) = p.eps / 2 - p.z_d / 2;
  h(3, 3) = p.eps / 2 - p.z_av;
  h(4, 4) = -p.eps / 2;
  h(1, 4) = h(4, 1) = p.t_s;
  h(2, 4) = h(4, 2) = -p.t_s;
  return h;
}

/// Eigenvalues in ascending order.
inline std::array<double, 5> eigenvalues(const Matrix5d& h) {
  Eigen::SelfAdjointEigenSolver<Matrix5d> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) out[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

struct SpectrumPoint {
  double eps_over_ts = 0;
  std::array<double, 5> levels{};  // ascending, in units of t_s
};

/// Spectrum along a detuning sweep, eps = x * t_s for x in [from, to].
inline std::vector<SpectrumPoint> spectrum(double t_s, double z_av, double z_d,
                                           double from, double to, int n_points) {
  if (t_s <= 0) throw std::invalid_argument("t_s must be positive");
  if (n_points < 2) throw std::invalid_argument("need at least 2 points");
  if (!(from < to)) throw std::invalid_argument("empty detuning range");
  std::vector<SpectrumPoint> pts;
  pts.reserve(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    SpectrumPoint pt;
    pt.eps_over_ts = from + (to - from) * i / (n_points - 1);
    const auto ev = eigenvalues(hamiltonian({pt.eps_over_ts * t_s, t_s, z_av, z_d}));
    for (int k = 0; k < 5; ++k) pt.levels[static_cast<size_t>(k)] = ev[static_cast<size_t>(k)] / t_s;
    pts.push_back(pt);
  }
  return pts;
}

/// Probability of leaking out of the ground branch when the anticrossing of
/// gap 2*t_s is traversed at detuning sweep rate v (Hz^2).
inline double lz_probability(double t_s, double v) {
  if (t_s <= 0 || v <= 0) throw std::invalid_argument("t_s and v must be positive");
  const double gap = 2 * t_s;
  return std::exp(-M_PI * gap * gap / (2 * v));
}

struct ShuttleEstimate {
  double t_s = 0;
  double p_target = 0;
  double amplitude_factor = 0;
  double v = 0;     // detuning sweep rate, Hz^2
  double t_sh = 0;  // single hop, s
  double T_sh = 0;  // steps * t_sh, s
  int steps = 0;
};

/// Slowest sweep rate whose leakage stays at p_target, and the resulting
/// hop and relay times. The detuning ramp spans amplitude_factor times the
/// anticrossing gap; a relay step chains `steps` hops.
inline ShuttleEstimate shuttle_time(double t_s, double p_target,
                                    double amplitude_factor = 4.0, int steps = 6) {
  if (t_s <= 0) throw std::invalid_argument("t_s must be positive");
  if (p_target <= 0 || p_target >= 1)
    throw std::invalid_argument("p_target must lie in (0, 1)");
  if (amplitude_factor <= 0) throw std::invalid_argument("amplitude_factor must be positive");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  ShuttleEstimate e;
  e.t_s = t_s;
  e.p_target = p_target;
  e.amplitude_factor = amplitude_factor;
  e.steps = steps;
  const double gap = 2 * t_s;
  e.v = M_PI * gap * gap / (2 * std::log(1 / p_target));
  e.t_sh = amplitude_factor * gap / e.v;
  e.T_sh = steps * e.t_sh;
  return e;
}

/// (z_av, z_d) in Hz for given g factors and magnetic field in tesla.
inline std::pair<double, double> zeeman_splittings(double g1, double g2, double field) {
  constexpr double mu_b_over_h = 1.39962449361e10;  // Hz per tesla
  return {0.5 * (g1 + g2) * mu_b_over_h * field, (g1 - g2) * mu_b_over_h * field};
}

}  // namespace qroute
