#include <doctest.h>

#include "grover/oracle.hpp"
#include "testutil.hpp"

using namespace grover;

TEST_CASE("marked sets are sorted, distinct, range-checked") {
  const MarkedSet marked(3, {5, 2, 5, 2});
  CHECK(marked.count() == 2);
  CHECK(marked.indices()[0] == 2);
  CHECK(marked.indices()[1] == 5);
  CHECK(marked.contains(5));
  CHECK_FALSE(marked.contains(3));
  CHECK(marked.search_space() == 8);

  CHECK_THROWS_AS(MarkedSet(2, {4}), IndexOutOfRange);
  CHECK_THROWS_AS(MarkedSet(0, {}), InvalidQubitCount);
  CHECK_NOTHROW(MarkedSet(2, {}));  // empty set is a legal identity oracle
}

TEST_CASE("phase oracle negates exactly the marked amplitudes") {
  // N=4, marked |11>: the uniform state becomes (1,1,1,-1)/2 exactly.
  const MarkedSet marked(2, {3});
  const StateVector flipped = phase_oracle_apply(uniform_state(2), marked);
  CHECK(flipped.amplitude(0) == Amplitude{0.5});
  CHECK(flipped.amplitude(1) == Amplitude{0.5});
  CHECK(flipped.amplitude(2) == Amplitude{0.5});
  CHECK(flipped.amplitude(3) == Amplitude{-0.5});

  // A marked basis state picks up a global minus sign (not quotiented).
  const MarkedSet five(3, {5});
  CHECK(phase_oracle_apply(basis_state(3, 5), five).amplitude(5) ==
        Amplitude{-1.0});

  // Empty set: identity.
  const MarkedSet none(2, {});
  CHECK(max_amplitude_difference(phase_oracle_apply(uniform_state(2), none),
                                 uniform_state(2)) == 0.0);

  CHECK_THROWS_AS(phase_oracle_apply(uniform_state(3), marked),
                  DimensionMismatch);
}

TEST_CASE("phase oracle applied twice is the identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 4;
    const MarkedSet marked =
        testutil::random_marked_set(n, 1 + rng() % ((1u << n) - 1), rng);
    const StateVector state = random_state(n, rng);
    CHECK(max_amplitude_difference(
              phase_oracle_apply(phase_oracle_apply(state, marked), marked),
              state) == 0.0);
  }
}

TEST_CASE("bit oracle flips the answer qubit exactly on marked inputs") {
  const MarkedSet marked(3, {5});
  for (BasisIndex x = 0; x < 8; ++x) {
    for (BasisIndex j = 0; j < 2; ++j) {
      const BasisIndex in = (x << 1) | j;
      const BasisIndex out = (x << 1) | (j ^ (x == 5 ? 1 : 0));
      const StateVector mapped =
          bit_oracle_apply(basis_state(4, in), marked);
      CHECK(mapped.amplitude(out) == Amplitude{1.0});
    }
  }
  std::mt19937_64 rng(37);
  const StateVector state = random_state(4, rng);
  CHECK(max_amplitude_difference(
            bit_oracle_apply(bit_oracle_apply(state, marked), marked),
            state) == 0.0);
  CHECK_THROWS_AS(bit_oracle_apply(uniform_state(3), marked),
                  DimensionMismatch);
}

TEST_CASE("oracle matrix is I - 2 sum |w><w| and matches direct application") {
  const MarkedSet marked(2, {3});
  const GateMatrix u = oracle_matrix(marked);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double expected = r != c ? 0.0 : (r == 3 ? -1.0 : 1.0);
      CHECK(u.entry(r, c) == Amplitude{expected});
    }
  }

  // Everything marked on one qubit: the oracle is -I.
  const GateMatrix all_marked = oracle_matrix(MarkedSet(1, {0, 1}));
  CHECK(all_marked.entry(0, 0) == Amplitude{-1.0});
  CHECK(all_marked.entry(1, 1) == Amplitude{-1.0});
  CHECK(all_marked.entry(0, 1) == Amplitude{0.0});
  CHECK(all_marked.entry(1, 0) == Amplitude{0.0});

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    const MarkedSet set =
        testutil::random_marked_set(n, rng() % (1u << n), rng);
    const StateVector state = random_state(n, rng);
    std::vector<int> all_targets;
    for (int q = 0; q < n; ++q) all_targets.push_back(q);
    CHECK(max_amplitude_difference(
              apply_gate(state, oracle_matrix(set), all_targets),
              phase_oracle_apply(state, set)) < 1e-15);
  }

  CHECK_THROWS_AS(oracle_matrix(MarkedSet(7, {0})), QubitCapExceeded);
}

TEST_CASE("bit oracle with a minus answer qubit acts as the phase oracle") {
  for (int n = 2; n <= 4; ++n) {
    const MarkedSet marked(n, {(BasisIndex{1} << n) - 3});
    const KickbackReport report = kickback_equivalence_check(marked, 100, 97);
    CHECK(report.equivalent);
    CHECK(report.max_deviation < 1e-12);
  }
  std::mt19937_64 rng(43);
  const MarkedSet multi = testutil::random_marked_set(4, 5, rng);
  const KickbackReport report = kickback_equivalence_check(multi, 100, 101);
  CHECK(report.equivalent);
  CHECK(report.max_deviation < 1e-12);

  // Nothing marked: both oracle forms are the identity.
  const KickbackReport trivial =
      kickback_equivalence_check(MarkedSet(3, {}), 20, 103);
  CHECK(trivial.equivalent);
  CHECK(trivial.max_deviation == 0.0);
}
