#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grover/statevector.hpp"

namespace grover {

// The set of basis states the search is looking for. Indices are kept
// sorted and distinct; an empty set is a legal (identity) oracle.
class MarkedSet {
 public:
  MarkedSet(int qubit_count, std::vector<BasisIndex> indices);

  int qubit_count() const { return qubit_count_; }
  std::uint64_t search_space() const { return std::uint64_t{1} << qubit_count_; }
  std::size_t count() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::span<const BasisIndex> indices() const { return indices_; }
  bool contains(BasisIndex index) const;

 private:
  int qubit_count_;
  std::vector<BasisIndex> indices_;
};

enum class OracleForm { BitFlip, Phase };

// Bit-flip oracle on n+1 qubits; the final (least significant) qubit is the
// answer register: |x>|j> -> |x>|j xor f(x)>.
StateVector bit_oracle_apply(const StateVector& state, const MarkedSet& marked);

// Phase oracle on n qubits: negates the amplitude of every marked state.
StateVector phase_oracle_apply(const StateVector& state,
                               const MarkedSet& marked);

// Explicit matrix I - 2 sum |w><w| over the marked states. Limited to
// kMaxExplicitMatrixQubits.
GateMatrix oracle_matrix(const MarkedSet& marked);

struct KickbackReport {
  bool equivalent;
  double max_deviation;
};

// Checks phase kickback on random states: the bit oracle applied to
// |phi> (|0>-|1>)/sqrt(2) must equal the phase oracle on |phi> tensored
// with the untouched answer qubit.
KickbackReport kickback_equivalence_check(const MarkedSet& marked,
                                          int state_count = 100,
                                          std::uint64_t seed = 0x5eed);

}  // namespace grover
