#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "grover/errors.hpp"
#include "grover/gates.hpp"

namespace grover {

using BasisIndex = std::uint64_t;

// Tolerance used when checking that a state is normalised.
inline constexpr double kNormTolerance = 1e-12;

// Upper bound on qubit counts for dense states. The default keeps the
// largest state at 16M amplitudes (256 MB).
int max_qubits();
void set_max_qubits(int cap);

// Dense n-qubit state. Basis indices follow ket order: qubit 0 is the most
// significant bit, so |101> on three qubits is index 5. Values are
// immutable once built; operations return new states.
class StateVector {
 public:
  StateVector(int qubit_count, std::vector<Amplitude> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(BasisIndex index) const;

 private:
  int qubit_count_;
  std::vector<Amplitude> amps_;
};

// |Psi> = H^n |0...0>: every amplitude exactly 1/sqrt(2^n).
StateVector uniform_state(int qubit_count);

StateVector basis_state(int qubit_count, BasisIndex index);

// Haar-ish random state: i.i.d. complex Gaussian amplitudes, normalised.
StateVector random_state(int qubit_count, std::mt19937_64& rng);

// Qubits of `a` become the most significant block of the result.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Applies `gate` to the listed target qubits; the first target maps to the
// most significant bit of the gate's own index space. Non-target qubits
// are untouched (stride iteration, no 2^n x 2^n matrix is formed).
StateVector apply_gate(const StateVector& state, const GateMatrix& gate,
                       std::span<const int> targets);

StateVector apply_fragment(const StateVector& state,
                           const CircuitFragment& fragment);

// <a|b> = sum conj(a_i) * b_i.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// Total probability of the given basis states (assumed distinct).
double probability_of(const StateVector& state,
                      std::span<const BasisIndex> basis_set);

// Largest elementwise modulus difference; the house state-comparison metric.
double max_amplitude_difference(const StateVector& a, const StateVector& b);

struct MeasurementOutcome {
  BasisIndex basis;
  double probability;  // |amplitude(basis)|^2 of the sampled state
};

// One Born-rule draw from a fresh generator seeded with `seed`.
MeasurementOutcome sample_measurement(const StateVector& state,
                                      std::uint64_t seed);

// `count` Born-rule draws from a single generator seeded with `seed`.
std::vector<BasisIndex> sample_measurements(const StateVector& state,
                                            std::size_t count,
                                            std::uint64_t seed);

}  // namespace grover
