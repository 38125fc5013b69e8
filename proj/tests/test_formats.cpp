#include "qroute/circuit.hpp"
#include "qroute/permutation.hpp"
#include "qroute/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace qroute;

namespace {

template <typename T, typename W, typename P>
T round_trip(const T& value, W write, P parse) {
  std::ostringstream os;
  write(os, value);
  std::istringstream is(os.str());
  return parse(is);
}

}  // namespace

TEST_CASE("circuit files round-trip including parameters") {
  SeededRng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Circuit c = random_circuit(rng, 6, 15);
    const Circuit back = round_trip(
        c, [](std::ostream& os, const Circuit& v) { write_circuit(os, v); },
        [](std::istream& is) { return parse_circuit(is); });
    REQUIRE(back == c);
  }
}

TEST_CASE("circuit parsing accepts comments and reports precise errors") {
  {
    std::istringstream is("# leading comment\nqubits 3 # inline\n\ng2 CZ 0 2\ng1 H 1\n");
    const Circuit c = parse_circuit(is);
    REQUIRE(c.qubit_count == 3);
    REQUIRE(c.gates.size() == 2);
    REQUIRE(c.gates[0] == Gate{"CZ", {0, 2}, {}});
  }
  const auto fails_with = [](const std::string& text, const std::string& want) {
    std::istringstream is(text);
    REQUIRE_THROWS_WITH(parse_circuit(is), Catch::Matchers::ContainsSubstring(want));
  };
  fails_with("g1 H 0\n", "line 1: expected 'qubits N' header");
  fails_with("qubits 2\nfoo H 0\n", "line 2: unknown instruction tag 'foo'");
  fails_with("qubits 2\ng1 H 5\n", "line 2: operand out of range");
  fails_with("qubits 2\ng2 CZ 0\n", "line 2: missing operand");
  fails_with("qubits 2\ng2 CZ 1 1\n", "line 2: two-qubit gate operands must be distinct");
  fails_with("qubits 2\n\ng2 CZ 0 1 9\n", "line 3: trailing tokens");
  fails_with("", "line 1: expected 'qubits N' header");
}

TEST_CASE("permutation files round-trip") {
  SeededRng rng(4);
  const Permutation p = random_permutation(rng, 12);
  const Permutation back = round_trip(
      p, [](std::ostream& os, const Permutation& v) { write_permutation(os, v); },
      [](std::istream& is) { return parse_permutation(is, 12); });
  REQUIRE(back.image() == p.image());
}

TEST_CASE("permutation parsing reports precise errors") {
  const auto fails_with = [](const std::string& text, int n, const std::string& want) {
    std::istringstream is(text);
    REQUIRE_THROWS_WITH(parse_permutation(is, n), Catch::Matchers::ContainsSubstring(want));
  };
  fails_with("0 1\n1\n", 2, "line 2: expected 'src dst'");
  fails_with("0 1\n1 0 7\n", 2, "line 2: trailing tokens");
  fails_with("0 2\n1 0\n", 2, "line 1: node out of range");
  fails_with("0 1\n0 0\n", 2, "line 2: duplicate source 0");
  fails_with("0 1\n", 2, "missing source 1");
  // a duplicated destination survives parsing line checks but not validation
  std::istringstream is("0 1\n1 1\n");
  REQUIRE_THROWS_AS(parse_permutation(is, 2), std::invalid_argument);
}

TEST_CASE("schedule files round-trip") {
  SwapSchedule s;
  s.layers = {{{0, 1}, {2, 3}}, {{1, 2}}, {}};
  std::ostringstream os;
  write_schedule(os, s);
  std::istringstream is(os.str());
  const SwapSchedule back = parse_schedule(is);
  // the empty trailing layer has no textual form; everything else survives
  REQUIRE(back.layers == decltype(back.layers){{{0, 1}, {2, 3}}, {{1, 2}}});
  REQUIRE(back.depth() == 2);
  REQUIRE(back.swap_count() == 3);

  for (const std::string bad : {"0-1 x-2\n", "0-1\n3\n", "-1\n", "2-\n"}) {
    std::istringstream bad_is(bad);
    REQUIRE_THROWS_WITH(parse_schedule(bad_is),
                        Catch::Matchers::ContainsSubstring("expected 'u-v'"));
  }
}

TEST_CASE("report text is stable") {
  PermutationReport r;
  r.depth = 4;
  r.swaps = 6;
  r.bound_depth = 4;
  r.bound_swaps = 6;
  std::ostringstream os;
  write_report(os, r);
  REQUIRE(os.str() == "depth=4\nswaps=6\nbound_depth=4\nbound_swaps=6\n");
}
