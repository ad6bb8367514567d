#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grover/errors.hpp"

namespace grover {

using Amplitude = std::complex<double>;

// Tolerance used when checking that a matrix is unitary.
inline constexpr double kUnitaryTolerance = 1e-12;

// Largest qubit count for which explicit 2^n x 2^n matrices are built.
inline constexpr int kMaxExplicitMatrixQubits = 6;

// Dense row-major unitary acting on `arity` qubits. Row/column index bits
// follow ket order: the first target qubit is the most significant bit.
// Unitarity is enforced at construction.
class GateMatrix {
 public:
  GateMatrix(int arity, std::vector<Amplitude> entries);

  int arity() const { return arity_; }
  std::size_t dim() const { return std::size_t{1} << arity_; }
  Amplitude entry(std::size_t row, std::size_t col) const {
    return entries_[row * dim() + col];
  }
  std::span<const Amplitude> entries() const { return entries_; }

  bool operator==(const GateMatrix&) const = default;

 private:
  int arity_;
  std::vector<Amplitude> entries_;
};

GateMatrix identity_gate(int arity = 1);
GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix pauli_z();
GateMatrix cnot();
GateMatrix cz();
GateMatrix toffoli();

// diag(1, -1, ..., -1): flips the phase of every basis state except |0...0>.
// Limited to kMaxExplicitMatrixQubits.
GateMatrix conditional_phase_zero(int qubit_count);

GateMatrix product(const GateMatrix& a, const GateMatrix& b);  // a * b
GateMatrix tensor(const GateMatrix& a, const GateMatrix& b);
GateMatrix tensor_power(const GateMatrix& g, int count);
GateMatrix adjoint(const GateMatrix& g);

// Largest elementwise modulus difference between two equal-sized matrices.
double max_entry_difference(const GateMatrix& a, const GateMatrix& b);

// One gate application within a circuit. Targets are qubit labels with
// qubit 0 the most significant bit of the basis index.
struct GateApplication {
  GateMatrix gate;
  std::vector<int> targets;
  std::string label;
};

using CircuitFragment = std::vector<GateApplication>;

// H on every qubit, in qubit order.
CircuitFragment hadamard_layer(int qubit_count);

}  // namespace grover
