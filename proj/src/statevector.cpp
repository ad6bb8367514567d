#include "grover/statevector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <utility>

namespace grover {

namespace {

std::atomic<int> g_max_qubits{24};

void check_qubit_count(int qubit_count) {
  if (qubit_count < 1) {
    throw InvalidQubitCount("qubit count must be positive, got " +
                            std::to_string(qubit_count));
  }
  const int cap = max_qubits();
  if (qubit_count > cap) {
    throw QubitCapExceeded("qubit count " + std::to_string(qubit_count) +
                           " exceeds the cap of " + std::to_string(cap));
  }
}

double squared_norm(const std::vector<Amplitude>& amps) {
  // Compensated summation: the check must not accumulate error with the
  // dimension, or large states would fail it spuriously.
  double total = 0.0;
  double carry = 0.0;
  for (const Amplitude& a : amps) {
    const double term = std::norm(a) - carry;
    const double next = total + term;
    carry = (next - total) - term;
    total = next;
  }
  return total;
}

}  // namespace

int max_qubits() { return g_max_qubits.load(); }

void set_max_qubits(int cap) {
  if (cap < 1 || cap > 62) {
    throw InvalidQubitCount("qubit cap must be between 1 and 62, got " +
                            std::to_string(cap));
  }
  g_max_qubits.store(cap);
}

StateVector::StateVector(int qubit_count, std::vector<Amplitude> amplitudes)
    : qubit_count_(qubit_count), amps_(std::move(amplitudes)) {
  check_qubit_count(qubit_count_);
  const std::size_t dim = std::size_t{1} << qubit_count_;
  if (amps_.size() != dim) {
    throw DimensionMismatch("state on " + std::to_string(qubit_count_) +
                            " qubit(s) needs " + std::to_string(dim) +
                            " amplitudes, got " + std::to_string(amps_.size()));
  }
  const double n2 = squared_norm(amps_);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw InvalidSize("state is not normalised (squared norm " +
                      std::to_string(n2) + ")");
  }
}

Amplitude StateVector::amplitude(BasisIndex index) const {
  if (index >= amps_.size()) {
    throw IndexOutOfRange("basis index " + std::to_string(index) +
                          " out of range for dimension " +
                          std::to_string(amps_.size()));
  }
  return amps_[index];
}

StateVector uniform_state(int qubit_count) {
  check_qubit_count(qubit_count);
  const std::size_t dim = std::size_t{1} << qubit_count;
  const double value = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(qubit_count, std::vector<Amplitude>(dim, value));
}

StateVector basis_state(int qubit_count, BasisIndex index) {
  check_qubit_count(qubit_count);
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (index >= dim) {
    throw IndexOutOfRange("basis index " + std::to_string(index) +
                          " out of range for dimension " + std::to_string(dim));
  }
  std::vector<Amplitude> amps(dim, 0.0);
  amps[index] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector random_state(int qubit_count, std::mt19937_64& rng) {
  check_qubit_count(qubit_count);
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(dim);
  double n2 = 0.0;
  for (Amplitude& a : amps) {
    a = Amplitude(gauss(rng), gauss(rng));
    n2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (Amplitude& a : amps) a *= scale;
  return StateVector(qubit_count, std::move(amps));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const int qubit_count = a.qubit_count() + b.qubit_count();
  check_qubit_count(qubit_count);
  const std::size_t db = b.dimension();
  std::vector<Amplitude> amps(a.dimension() * db);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      amps[i * db + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return StateVector(qubit_count, std::move(amps));
}

StateVector apply_gate(const StateVector& state, const GateMatrix& gate,
                       std::span<const int> targets) {
  const int n = state.qubit_count();
  const int m = gate.arity();
  if (static_cast<std::size_t>(m) != targets.size()) {
    throw DimensionMismatch("gate acts on " + std::to_string(m) +
                            " qubit(s) but " + std::to_string(targets.size()) +
                            " target(s) given");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n) {
      throw TargetOutOfRange("target qubit " + std::to_string(targets[i]) +
                             " out of range for " + std::to_string(n) +
                             " qubit(s)");
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw DuplicateTarget("target qubit " + std::to_string(targets[i]) +
                              " listed twice");
      }
    }
  }

  // Qubit q sits at bit position n-1-q of the basis index. offsets[g]
  // scatters gate-local index g (first target = most significant gate bit)
  // onto those positions.
  const std::size_t sub = gate.dim();
  std::vector<BasisIndex> offsets(sub, 0);
  for (std::size_t g = 0; g < sub; ++g) {
    for (int j = 0; j < m; ++j) {
      if ((g >> (m - 1 - j)) & 1) {
        offsets[g] |= BasisIndex{1} << (n - 1 - targets[j]);
      }
    }
  }

  // Bit positions of the targets, ascending, for base-index expansion.
  std::vector<int> positions(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    positions[i] = n - 1 - targets[i];
  }
  std::sort(positions.begin(), positions.end());

  std::vector<Amplitude> amps(state.amplitudes().begin(),
                              state.amplitudes().end());
  std::vector<Amplitude> in(sub);
  const std::size_t bases = std::size_t{1} << (n - m);
  for (std::size_t k = 0; k < bases; ++k) {
    // Insert a zero bit at each target position (ascending keeps earlier
    // insertions stable).
    BasisIndex base = k;
    for (int p : positions) {
      const BasisIndex low = base & ((BasisIndex{1} << p) - 1);
      base = ((base >> p) << (p + 1)) | low;
    }
    for (std::size_t g = 0; g < sub; ++g) in[g] = amps[base | offsets[g]];
    for (std::size_t r = 0; r < sub; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < sub; ++c) acc += gate.entry(r, c) * in[c];
      amps[base | offsets[r]] = acc;
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector apply_fragment(const StateVector& state,
                           const CircuitFragment& fragment) {
  StateVector result = state;
  for (const GateApplication& app : fragment) {
    result = apply_gate(result, app.gate, app.targets);
  }
  return result;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw DimensionMismatch("cannot take the inner product of states on " +
                            std::to_string(a.qubit_count()) + " and " +
                            std::to_string(b.qubit_count()) + " qubit(s)");
  }
  Amplitude sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    sum += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return sum;
}

double probability_of(const StateVector& state,
                      std::span<const BasisIndex> basis_set) {
  double total = 0.0;
  for (BasisIndex i : basis_set) {
    if (i >= state.dimension()) {
      throw IndexOutOfRange("basis index " + std::to_string(i) +
                            " out of range for dimension " +
                            std::to_string(state.dimension()));
    }
    total += std::norm(state.amplitudes()[i]);
  }
  return total;
}

double max_amplitude_difference(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw DimensionMismatch("cannot compare states on " +
                            std::to_string(a.qubit_count()) + " and " +
                            std::to_string(b.qubit_count()) + " qubit(s)");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return worst;
}

namespace {

BasisIndex draw_index(const StateVector& state, double r) {
  double cumulative = 0.0;
  BasisIndex last_nonzero = 0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double p = std::norm(state.amplitudes()[i]);
    if (p > 0.0) last_nonzero = i;
    cumulative += p;
    if (r < cumulative) return i;
  }
  // r landed in the rounding slack past the final cumulative value.
  return last_nonzero;
}

}  // namespace

MeasurementOutcome sample_measurement(const StateVector& state,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const BasisIndex basis = draw_index(state, unit(rng));
  return {basis, std::norm(state.amplitudes()[basis])};
}

std::vector<BasisIndex> sample_measurements(const StateVector& state,
                                            std::size_t count,
                                            std::uint64_t seed) {
  std::vector<double> cumulative(state.dimension());
  double total = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    total += std::norm(state.amplitudes()[i]);
    cumulative[i] = total;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<BasisIndex> draws;
  draws.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const double r = unit(rng) * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), r);
    const std::size_t i = it == cumulative.end()
                              ? state.dimension() - 1
                              : static_cast<std::size_t>(
                                    std::distance(cumulative.begin(), it));
    draws.push_back(i);
  }
  return draws;
}

}  // namespace grover
