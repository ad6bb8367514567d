#include "grover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace grover {

MarkedSet::MarkedSet(int qubit_count, std::vector<BasisIndex> indices)
    : qubit_count_(qubit_count), indices_(std::move(indices)) {
  if (qubit_count_ < 1) {
    throw InvalidQubitCount("qubit count must be positive, got " +
                            std::to_string(qubit_count_));
  }
  if (qubit_count_ > max_qubits()) {
    throw QubitCapExceeded("qubit count " + std::to_string(qubit_count_) +
                           " exceeds the cap of " + std::to_string(max_qubits()));
  }
  const std::uint64_t dim = std::uint64_t{1} << qubit_count_;
  for (BasisIndex i : indices_) {
    if (i >= dim) {
      throw IndexOutOfRange("marked index " + std::to_string(i) +
                            " out of range for dimension " +
                            std::to_string(dim));
    }
  }
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
}

bool MarkedSet::contains(BasisIndex index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

StateVector bit_oracle_apply(const StateVector& state,
                             const MarkedSet& marked) {
  if (state.qubit_count() != marked.qubit_count() + 1) {
    throw DimensionMismatch(
        "bit oracle for " + std::to_string(marked.qubit_count()) +
        " data qubit(s) needs a state on " +
        std::to_string(marked.qubit_count() + 1) + " qubit(s), got " +
        std::to_string(state.qubit_count()));
  }
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  for (BasisIndex x : marked.indices()) {
    std::swap(amps[(x << 1) | 0], amps[(x << 1) | 1]);
  }
  return StateVector(state.qubit_count(), std::move(amps));
}

StateVector phase_oracle_apply(const StateVector& state,
                               const MarkedSet& marked) {
  if (state.qubit_count() != marked.qubit_count()) {
    throw DimensionMismatch("phase oracle on " +
                            std::to_string(marked.qubit_count()) +
                            " qubit(s) applied to a state on " +
                            std::to_string(state.qubit_count()));
  }
  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  for (BasisIndex x : marked.indices()) amps[x] = -amps[x];
  return StateVector(state.qubit_count(), std::move(amps));
}

GateMatrix oracle_matrix(const MarkedSet& marked) {
  const int n = marked.qubit_count();
  if (n > kMaxExplicitMatrixQubits) {
    throw QubitCapExceeded("explicit matrices are limited to " +
                           std::to_string(kMaxExplicitMatrixQubits) +
                           " qubits, got " + std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitude> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    m[i * dim + i] = marked.contains(i) ? -1.0 : 1.0;
  }
  return GateMatrix(n, std::move(m));
}

KickbackReport kickback_equivalence_check(const MarkedSet& marked,
                                          int state_count,
                                          std::uint64_t seed) {
  const double s = 1.0 / std::numbers::sqrt2;
  const StateVector answer_minus(1, {s, -s});
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < state_count; ++i) {
    const StateVector phi = random_state(marked.qubit_count(), rng);
    const StateVector via_bit =
        bit_oracle_apply(tensor_product(phi, answer_minus), marked);
    const StateVector via_phase =
        tensor_product(phase_oracle_apply(phi, marked), answer_minus);
    worst = std::max(worst, max_amplitude_difference(via_bit, via_phase));
  }
  return {worst < 1e-12, worst};
}

}  // namespace grover
