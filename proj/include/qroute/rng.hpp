#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "permutation.hpp"

/// Seed-stable randomness for sweeps and tests: a fixed mt19937_64 stream,
/// rejection-sampled bounds and Fisher-Yates shuffles. No use of
/// std::*_distribution, whose output may differ between standard libraries.

namespace qroute {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform value in [0, n), bias-free by rejection.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do { x = eng_(); } while (x >= limit);
    return x % n;
  }

  /// Uniform integer in [lo, hi].
  int range(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

inline Permutation random_permutation(SeededRng& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[static_cast<size_t>(i)], img[rng.bounded(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(img));
}

/// Random mix of one- and two-qubit gates on distinct operands.
inline Circuit random_circuit(SeededRng& rng, int qubit_count, int gate_count) {
  if (qubit_count < 2) throw std::invalid_argument("need at least 2 qubits");
  Circuit c;
  c.qubit_count = qubit_count;
  for (int i = 0; i < gate_count; ++i) {
    if (rng.bounded(2) == 0) {
      const int q = rng.range(0, qubit_count - 1);
      if (rng.bounded(2) == 0)
        c.gates.push_back({"RZ", {q}, {static_cast<double>(rng.bounded(6283)) / 1000.0}});
      else
        c.gates.push_back({"H", {q}, {}});
    } else {
      const int a = rng.range(0, qubit_count - 1);
      int b = rng.range(0, qubit_count - 2);
      if (b >= a) ++b;
      c.gates.push_back({"CZ", {a, b}, {}});
    }
  }
  return c;
}

}  // namespace qroute
