#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grover/statevector.hpp"

namespace grover {

// The hard-wired four-item search circuit: two data qubits, one search
// iteration, deterministic readout of the marked two-bit string.
enum class OracleStyle { Toffoli, SimplifiedCz };

enum class Stage { Prepare, Oracle, Discard, Amplify };

struct CircuitOp {
  Stage stage;
  GateApplication app;
};

struct CircuitSpec {
  int qubit_count;
  std::vector<CircuitOp> ops;
  int oracle_qubit;                   // wire index, -1 when absent
  std::array<bool, 2> classical_not;  // NOT applied to measured a, b
  std::string marked;                 // two-bit string "x1x2"
  OracleStyle style;
};

// Number of distinct oracle blocks in the op list.
int oracle_call_count(const CircuitSpec& spec);

// Builds the circuit for one marked string ("00" .. "11"). The Toffoli
// style carries an answer qubit on the bottom wire, prepared from |1> by H
// and returned to |1> by H before it is measured off. The simplified style
// folds the oracle into an X-conjugated controlled-Z on the data qubits.
CircuitSpec build_circuit(std::string_view marked, OracleStyle style);

struct CircuitOutcome {
  int a;                          // output bit a (after classical NOT)
  int b;                          // output bit b
  int oracle_bit;                 // always 1
  std::string output_string;      // "ab"
  double outcome_probability;     // weight of the measured data outcome
  double oracle_one_probability;  // weight of answer-qubit outcome 1
};

struct StageRecord {
  std::string label;
  StateVector state;
};

// Runs the circuit. The pre-measurement data state must be a single basis
// state and the answer qubit (when present) must read 1, both within
// 1e-12; anything else throws. Pass `trace` to capture per-stage states.
CircuitOutcome run_circuit(const CircuitSpec& spec,
                           std::vector<StageRecord>* trace = nullptr);

struct EquivalenceReport {
  bool equivalent;
  double max_deviation;
};

// Checks on random data states that the Toffoli oracle block acting on
// |data>(|0>-|1>)/sqrt(2) equals the simplified block on the data qubits
// alone, tensored with the untouched answer qubit.
EquivalenceReport oracle_equivalence_check(std::string_view marked,
                                           int state_count = 50,
                                           std::uint64_t seed = 0x5eed);

}  // namespace grover
