#include <cmath>
#include <doctest.h>
#include <numbers>

#include "grover/statevector.hpp"
#include "testutil.hpp"

using namespace grover;

namespace {

// Restores the default qubit cap when a test adjusts it.
struct CapGuard {
  int saved = max_qubits();
  ~CapGuard() { set_max_qubits(saved); }
};

double marginal_one(const StateVector& state, int qubit) {
  const int shift = state.qubit_count() - 1 - qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if ((i >> shift) & 1) p += std::norm(state.amplitudes()[i]);
  }
  return p;
}

}  // namespace

TEST_CASE("uniform state has equal positive real amplitudes") {
  const StateVector one = uniform_state(1);
  const double root_half = 1.0 / std::sqrt(2.0);
  CHECK(one.amplitude(0) == Amplitude{root_half});
  CHECK(one.amplitude(1) == Amplitude{root_half});

  const StateVector three = uniform_state(3);
  const double expected = 1.0 / std::sqrt(8.0);
  for (std::size_t i = 0; i < three.dimension(); ++i) {
    CHECK(three.amplitudes()[i] == Amplitude{expected});
  }
  const std::vector<BasisIndex> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(probability_of(three, all) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qubit 0 is the most significant bit of the basis index") {
  // |101> lives at index 5; flipping qubit 0 turns it into |001> = 1.
  const StateVector s = basis_state(3, 5);
  CHECK(s.amplitude(5) == Amplitude{1.0});
  const std::vector<int> q0{0};
  const StateVector flipped = apply_gate(s, pauli_x(), q0);
  CHECK(flipped.amplitude(1) == Amplitude{1.0});
  const std::vector<int> q2{2};
  const StateVector flipped_last = apply_gate(s, pauli_x(), q2);
  CHECK(flipped_last.amplitude(4) == Amplitude{1.0});
}

TEST_CASE("hadamard layer prepares the uniform state and undoes itself") {
  const StateVector from_layer =
      apply_fragment(basis_state(2, 0), hadamard_layer(2));
  CHECK(max_amplitude_difference(from_layer, uniform_state(2)) < 1e-12);

  std::mt19937_64 rng(7);
  const StateVector state = random_state(5, rng);
  const StateVector round_trip =
      apply_fragment(apply_fragment(state, hadamard_layer(5)),
                     hadamard_layer(5));
  CHECK(max_amplitude_difference(round_trip, state) < 1e-12);
}

TEST_CASE("gates preserve the norm") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const int arity = 1 + trial % 3;
    StateVector state = random_state(n, rng);
    const GateMatrix gate = testutil::random_unitary(arity, rng);
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < arity) {
      const int q = static_cast<int>(rng() % n);
      bool seen = false;
      for (int t : targets) seen = seen || t == q;
      if (!seen) targets.push_back(q);
    }
    state = apply_gate(state, gate, targets);
    double norm2 = 0.0;
    for (const Amplitude& a : state.amplitudes()) norm2 += std::norm(a);
    CHECK(std::abs(norm2 - 1.0) < 1e-12);
  }
}

TEST_CASE("applying gate A then B equals applying the product B*A") {
  std::mt19937_64 rng(13);
  const StateVector state = random_state(4, rng);
  const std::vector<GateMatrix> one_qubit{hadamard(), pauli_x(), pauli_z()};
  for (const GateMatrix& a : one_qubit) {
    for (const GateMatrix& b : one_qubit) {
      for (int q = 0; q < 4; ++q) {
        const std::vector<int> targets{q};
        const StateVector stepwise =
            apply_gate(apply_gate(state, a, targets), b, targets);
        const StateVector fused = apply_gate(state, product(b, a), targets);
        CHECK(max_amplitude_difference(stepwise, fused) < 1e-12);
      }
    }
  }
  const std::vector<GateMatrix> two_qubit{cnot(), cz()};
  for (const GateMatrix& a : two_qubit) {
    for (const GateMatrix& b : two_qubit) {
      for (int q0 = 0; q0 < 4; ++q0) {
        for (int q1 = 0; q1 < 4; ++q1) {
          if (q0 == q1) continue;
          const std::vector<int> targets{q0, q1};
          const StateVector stepwise =
              apply_gate(apply_gate(state, a, targets), b, targets);
          const StateVector fused = apply_gate(state, product(b, a), targets);
          CHECK(max_amplitude_difference(stepwise, fused) < 1e-12);
        }
      }
    }
  }
  const std::vector<int> toffoli_targets{1, 3, 0};
  const StateVector twice = apply_gate(
      apply_gate(state, toffoli(), toffoli_targets), toffoli(),
      toffoli_targets);
  const StateVector fused =
      apply_gate(state, product(toffoli(), toffoli()), toffoli_targets);
  CHECK(max_amplitude_difference(twice, fused) < 1e-12);
}

TEST_CASE("a one-qubit gate leaves other qubits' marginals unchanged") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const StateVector state = random_state(4, rng);
    const int target = static_cast<int>(rng() % 4);
    const std::vector<int> targets{target};
    const StateVector after =
        apply_gate(state, testutil::random_unitary(1, rng), targets);
    for (int q = 0; q < 4; ++q) {
      if (q == target) continue;
      CHECK(std::abs(marginal_one(state, q) - marginal_one(after, q)) < 1e-12);
    }
  }
}

TEST_CASE("inner product") {
  CHECK(inner_product(uniform_state(3), basis_state(3, 5)).real() ==
        doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-14));
  std::mt19937_64 rng(19);
  const StateVector a = random_state(3, rng);
  const StateVector b = random_state(3, rng);
  const Amplitude ab = inner_product(a, b);
  const Amplitude ba = inner_product(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
  CHECK(std::abs(inner_product(a, a).real() - 1.0) < 1e-12);
}

TEST_CASE("probabilities sum to one over any basis partition") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 6;
    const StateVector state = random_state(n, rng);
    std::vector<BasisIndex> all(state.dimension());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    CHECK(std::abs(probability_of(state, all) - 1.0) < 1e-12);
    const std::vector<BasisIndex> front(all.begin(),
                                        all.begin() + all.size() / 2);
    const std::vector<BasisIndex> back(all.begin() + all.size() / 2,
                                       all.end());
    CHECK(std::abs(probability_of(state, front) + probability_of(state, back) -
                   1.0) < 1e-12);
  }
}

TEST_CASE("tensor product places the first factor in the high bits") {
  const StateVector joint = tensor_product(basis_state(2, 2), basis_state(1, 1));
  CHECK(joint.qubit_count() == 3);
  CHECK(joint.amplitude(5) == Amplitude{1.0});  // |10> x |1> = |101>
}

TEST_CASE("measurement sampling is seeded and Born-distributed") {
  const StateVector pinned = basis_state(4, 7);
  for (std::uint64_t seed : {1ull, 99ull, 31337ull}) {
    const MeasurementOutcome outcome = sample_measurement(pinned, seed);
    CHECK(outcome.basis == 7);
    CHECK(outcome.probability == 1.0);
  }

  const StateVector state = uniform_state(3);
  const MeasurementOutcome first = sample_measurement(state, 505);
  const MeasurementOutcome second = sample_measurement(state, 505);
  CHECK(first.basis == second.basis);
  CHECK(first.probability == doctest::Approx(0.125).epsilon(1e-12));

  // Frequency check against a binomial three-sigma band around 1/1024.
  const StateVector big = uniform_state(10);
  const std::size_t draws = 100000;
  const std::vector<BasisIndex> samples = sample_measurements(big, draws, 424242);
  REQUIRE(samples.size() == draws);
  const double p = 1.0 / 1024.0;
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
  for (BasisIndex watched : {BasisIndex{0}, BasisIndex{511}, BasisIndex{777}}) {
    std::size_t hits = 0;
    for (BasisIndex s : samples) hits += s == watched ? 1 : 0;
    const double frequency = static_cast<double>(hits) / draws;
    CHECK(std::abs(frequency - p) < 3.0 * sigma);
  }
}

TEST_CASE("statevector input validation") {
  CHECK_THROWS_AS(uniform_state(0), InvalidQubitCount);
  CHECK_THROWS_AS(uniform_state(-2), InvalidQubitCount);
  CHECK_THROWS_AS(uniform_state(25), QubitCapExceeded);
  CHECK_THROWS_AS(basis_state(2, 4), IndexOutOfRange);
  CHECK_THROWS_AS(StateVector(1, {1.0, 1.0}), InvalidSize);
  CHECK_THROWS_AS(StateVector(2, {1.0, 0.0}), DimensionMismatch);

  const StateVector state = uniform_state(2);
  CHECK_THROWS_AS(state.amplitude(4), IndexOutOfRange);
  const std::vector<int> bad_target{2};
  CHECK_THROWS_AS(apply_gate(state, hadamard(), bad_target), TargetOutOfRange);
  const std::vector<int> repeated{1, 1};
  CHECK_THROWS_AS(apply_gate(state, cnot(), repeated), DuplicateTarget);
  const std::vector<int> too_many{0, 1};
  CHECK_THROWS_AS(apply_gate(state, hadamard(), too_many), DimensionMismatch);
  CHECK_THROWS_AS(inner_product(state, uniform_state(3)), DimensionMismatch);
  const std::vector<BasisIndex> out{4};
  CHECK_THROWS_AS(probability_of(state, out), IndexOutOfRange);

  CapGuard guard;
  set_max_qubits(4);
  CHECK_THROWS_AS(uniform_state(5), QubitCapExceeded);
  CHECK_NOTHROW(uniform_state(4));
  CHECK_THROWS_AS(set_max_qubits(0), InvalidQubitCount);
}
