#include "qroute/metrics.hpp"
#include "qroute/topology.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qroute;

TEST_CASE("chain distance closed forms") {
  for (int n : {2, 3, 8, 17, 100}) {
    REQUIRE(total_linear_closed(n) == BigInt(n) * (BigInt(n) * n - 1) / 6);
    REQUIRE(mean_linear_closed(n) == BigRat(BigInt(n) + 1, 3));
    REQUIRE(max_linear_closed(n) == n - 1);
  }
  for (int n : {2, 3, 8, 17}) {
    const DistanceStats st = stats_bruteforce(build_linear(n));
    REQUIRE(st.total == total_linear_closed(n));
    REQUIRE(st.mean == mean_linear_closed(n));
    REQUIRE(st.max == max_linear_closed(n));
    REQUIRE(st.pair_count == static_cast<long long>(n) * (n - 1) / 2);
  }
  REQUIRE_THROWS_AS(mean_linear_closed(1), std::domain_error);
}

TEST_CASE("grid distance closed forms") {
  for (auto [lx, ly] : {std::pair{2, 2}, {3, 5}, {8, 4}, {1, 7}}) {
    const DistanceStats st = stats_bruteforce(build_rectangular(lx, ly));
    REQUIRE(st.total == total_rect_closed(lx, ly));
    REQUIRE(st.mean == mean_rect_closed(lx, ly));
    REQUIRE(st.max == max_rect_closed(lx, ly));
  }
  REQUIRE(mean_rect_closed(8, 4) == BigRat(4));
  REQUIRE(max_rect_closed(8, 4) == 10);
  REQUIRE_THROWS_AS(mean_rect_closed(1, 1), std::domain_error);
}

TEST_CASE("sparse mean distance anchors") {
  REQUIRE(mean_sparse_closed(1, 1, 1) == BigRat(4, 3));
  REQUIRE(mean_sparse_closed(4, 1, 1) == BigRat(64, 15));
  REQUIRE(mean_sparse_closed(4, 2, 3) == BigRat(2764, 285));
}

TEST_CASE("sparse distance term bookkeeping on a 2x1 tiling") {
  const SparseDistanceTerms t = sparse_distance_terms(2, 2, 1);
  REQUIRE(t.l_sq1 == 0);
  REQUIRE(t.l_p1 == 0);
  REQUIRE(t.l_p2 == 0);
  REQUIRE(t.l_p3 == 0);
  REQUIRE(t.l_q == 256);  // 32 m^3
  REQUIRE(t.n_sq == 1);
  REQUIRE(t.n_sq1 == 0);
  REQUIRE(t.n_sq2 == 1);
  REQUIRE(t.d_neq == 256);
  REQUIRE(t.d_eq == 128);
  // ordered pair total / N(N-1) with N = 16
  REQUIRE(mean_sparse_closed(2, 2, 1) == BigRat(2 * (256 + 128), 16 * 15));
  REQUIRE(mean_sparse_closed(2, 2, 1) == BigRat(16, 5));
}

TEST_CASE("sparse closed form equals brute force and ignores orientation") {
  for (int m : {1, 2, 3})
    for (int dx : {1, 2, 3})
      for (int dy : {1, 2}) {
        INFO("m=" << m << " dx=" << dx << " dy=" << dy);
        const DistanceStats st = stats_bruteforce(build_sparse(m, dx, dy));
        REQUIRE(mean_sparse_closed(m, dx, dy) == st.mean);
        REQUIRE(mean_sparse_closed(m, dy, dx) == st.mean);
      }
}

TEST_CASE("square-device mean agrees with the general form") {
  for (int m = 1; m <= 4; ++m)
    for (int d = 1; d <= 4; ++d)
      REQUIRE(mean_sparse_square_closed(m, d) == mean_sparse_closed(m, d, d));
}

TEST_CASE("square-device mean approaches 7/15 of the diameter from above") {
  const int m = 4;
  BigRat prev_err;
  for (int d = 1; d <= 6; ++d) {
    const BigRat ratio = mean_sparse_square_closed(m, d) / BigRat(2 * m * d);
    REQUIRE(ratio > BigRat(7, 15));
    const BigRat err = ratio - BigRat(7, 15);
    if (d > 1) REQUIRE(err < prev_err);
    prev_err = err;
  }
}

TEST_CASE("square-device diameter closed form") {
  for (int m : {1, 2, 4})
    for (int d : {1, 2}) {
      REQUIRE(max_sparse_closed(m, d, d) == 2 * m * d);
      REQUIRE(stats_bruteforce(build_sparse(m, d, d)).max == 2 * m * d);
    }
  REQUIRE_THROWS_AS(max_sparse_closed(2, 2, 1), std::domain_error);
}

TEST_CASE("distance statistics input validation") {
  REQUIRE_THROWS_AS(stats_bruteforce(build_linear(1)), std::domain_error);
  REQUIRE_THROWS_AS(detail::exact_div(BigInt(7), BigInt(2)), std::logic_error);
  REQUIRE(detail::exact_div(BigInt(42), BigInt(6)) == 7);
}
