#include "grover/circuit4.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace grover {

namespace {

constexpr double kDeterminismTolerance = 1e-12;

void check_marked(std::string_view marked) {
  if (marked.size() != 2 ||
      marked.find_first_not_of("01") != std::string_view::npos) {
    throw InvalidMarkedString("marked string must be two bits, got \"" +
                              std::string(marked) + "\"");
  }
}

// X gates that make the controlled phase fire exactly on the marked
// string: a control bit of 0 is conjugated by X.
void push_control_flips(std::vector<CircuitOp>& ops, std::string_view marked) {
  for (int q = 0; q < 2; ++q) {
    if (marked[q] == '0') {
      ops.push_back({Stage::Oracle, {pauli_x(), {q}, "X q" + std::to_string(q)}});
    }
  }
}

void push_amplify(std::vector<CircuitOp>& ops) {
  ops.push_back({Stage::Amplify, {pauli_z(), {0}, "Z q0"}});
  ops.push_back({Stage::Amplify, {hadamard(), {0}, "H q0"}});
  ops.push_back({Stage::Amplify, {cnot(), {0, 1}, "CNOT q0 q1"}});
  ops.push_back({Stage::Amplify, {hadamard(), {0}, "H q0"}});
}

int bit_of(BasisIndex index, int qubit, int qubit_count) {
  return static_cast<int>((index >> (qubit_count - 1 - qubit)) & 1);
}

}  // namespace

int oracle_call_count(const CircuitSpec& spec) {
  int blocks = 0;
  Stage previous = Stage::Prepare;
  bool first = true;
  for (const CircuitOp& op : spec.ops) {
    if (op.stage == Stage::Oracle && (first || previous != Stage::Oracle)) {
      ++blocks;
    }
    previous = op.stage;
    first = false;
  }
  return blocks;
}

CircuitSpec build_circuit(std::string_view marked, OracleStyle style) {
  check_marked(marked);
  CircuitSpec spec;
  spec.marked = std::string(marked);
  spec.style = style;
  spec.classical_not = {true, false};
  spec.qubit_count = style == OracleStyle::Toffoli ? 3 : 2;
  spec.oracle_qubit = style == OracleStyle::Toffoli ? 2 : -1;

  for (const GateApplication& app : hadamard_layer(spec.qubit_count)) {
    spec.ops.push_back({Stage::Prepare, app});
  }
  push_control_flips(spec.ops, marked);
  if (style == OracleStyle::Toffoli) {
    spec.ops.push_back(
        {Stage::Oracle, {toffoli(), {0, 1, 2}, "Toffoli q0 q1 q2"}});
  } else {
    spec.ops.push_back({Stage::Oracle, {cz(), {0, 1}, "C-Z q0 q1"}});
  }
  push_control_flips(spec.ops, marked);
  if (style == OracleStyle::Toffoli) {
    // Returns the answer qubit from (|0>-|1>)/sqrt(2) to |1> so that its
    // measurement reads 1 with certainty before the wire is dropped.
    spec.ops.push_back({Stage::Discard, {hadamard(), {2}, "H q2"}});
  }
  push_amplify(spec.ops);
  return spec;
}

CircuitOutcome run_circuit(const CircuitSpec& spec,
                           std::vector<StageRecord>* trace) {
  const int n = spec.qubit_count;
  // Data qubits start in |0>, the answer qubit in |1>.
  BasisIndex initial = 0;
  if (spec.oracle_qubit >= 0) {
    initial |= BasisIndex{1} << (n - 1 - spec.oracle_qubit);
  }
  StateVector state = basis_state(n, initial);
  if (trace != nullptr) trace->push_back({"initial", state});

  double oracle_one = 1.0;
  for (std::size_t i = 0; i < spec.ops.size(); ++i) {
    const CircuitOp& op = spec.ops[i];
    state = apply_gate(state, op.app.gate, op.app.targets);
    if (trace != nullptr) trace->push_back({op.app.label, state});
    const bool last_discard =
        op.stage == Stage::Discard &&
        (i + 1 == spec.ops.size() || spec.ops[i + 1].stage != Stage::Discard);
    if (last_discard && spec.oracle_qubit >= 0) {
      // Measure the answer qubit. Its marginal must be pinned on 1, so
      // projecting changes nothing and the wire can be ignored from here.
      const int position = n - 1 - spec.oracle_qubit;
      oracle_one = 0.0;
      for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
        if ((idx >> position) & 1) {
          oracle_one += std::norm(state.amplitudes()[idx]);
        }
      }
      if (std::abs(oracle_one - 1.0) > kDeterminismTolerance) {
        throw Error("answer qubit is not deterministic (P(1) = " +
                    std::to_string(oracle_one) + ")");
      }
    }
  }

  // Read the data register: the state must have collapsed to one basis
  // state already, so the measurement is deterministic.
  std::size_t top = 0;
  double top_probability = 0.0;
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    const double p = std::norm(state.amplitudes()[idx]);
    if (p > top_probability) {
      top_probability = p;
      top = idx;
    }
  }
  if (std::abs(top_probability - 1.0) > kDeterminismTolerance) {
    throw Error("pre-measurement state is not a basis state (top weight " +
                std::to_string(top_probability) + ")");
  }
  if (spec.oracle_qubit >= 0 &&
      bit_of(top, spec.oracle_qubit, n) != 1) {
    throw Error("answer qubit read 0");
  }

  CircuitOutcome outcome;
  outcome.oracle_bit = 1;
  outcome.oracle_one_probability = oracle_one;
  outcome.outcome_probability = top_probability;
  const int measured_a = bit_of(top, 0, n);
  const int measured_b = bit_of(top, 1, n);
  outcome.a = measured_a ^ (spec.classical_not[0] ? 1 : 0);
  outcome.b = measured_b ^ (spec.classical_not[1] ? 1 : 0);
  outcome.output_string = std::string() + static_cast<char>('0' + outcome.a) +
                          static_cast<char>('0' + outcome.b);
  return outcome;
}

EquivalenceReport oracle_equivalence_check(std::string_view marked,
                                           int state_count,
                                           std::uint64_t seed) {
  check_marked(marked);
  const CircuitSpec with_toffoli = build_circuit(marked, OracleStyle::Toffoli);
  const CircuitSpec simplified =
      build_circuit(marked, OracleStyle::SimplifiedCz);
  CircuitFragment toffoli_block;
  for (const CircuitOp& op : with_toffoli.ops) {
    if (op.stage == Stage::Oracle) toffoli_block.push_back(op.app);
  }
  CircuitFragment cz_block;
  for (const CircuitOp& op : simplified.ops) {
    if (op.stage == Stage::Oracle) cz_block.push_back(op.app);
  }

  const double s = 1.0 / std::numbers::sqrt2;
  const StateVector answer_minus(1, {s, -s});
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < state_count; ++i) {
    const StateVector data = random_state(2, rng);
    const StateVector via_toffoli =
        apply_fragment(tensor_product(data, answer_minus), toffoli_block);
    const StateVector via_cz =
        tensor_product(apply_fragment(data, cz_block), answer_minus);
    worst = std::max(worst, max_amplitude_difference(via_toffoli, via_cz));
  }
  return {worst < 1e-12, worst};
}

}  // namespace grover
