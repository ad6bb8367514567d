#include "grover/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace grover {

namespace {

// max |(U U+ - I)_{rc}| over all entries.
double unitarity_deviation(int arity, const std::vector<Amplitude>& m) {
  const std::size_t dim = std::size_t{1} << arity;
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        sum += m[r * dim + k] * std::conj(m[c * dim + k]);
      }
      if (r == c) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

}  // namespace

GateMatrix::GateMatrix(int arity, std::vector<Amplitude> entries)
    : arity_(arity), entries_(std::move(entries)) {
  if (arity_ < 1 || arity_ > kMaxExplicitMatrixQubits) {
    throw InvalidQubitCount("gate arity must be between 1 and " +
                            std::to_string(kMaxExplicitMatrixQubits) +
                            ", got " + std::to_string(arity_));
  }
  const std::size_t d = dim();
  if (entries_.size() != d * d) {
    throw DimensionMismatch("gate on " + std::to_string(arity_) +
                            " qubit(s) needs " + std::to_string(d * d) +
                            " entries, got " + std::to_string(entries_.size()));
  }
  const double dev = unitarity_deviation(arity_, entries_);
  if (dev > kUnitaryTolerance) {
    throw NonUnitaryGate("matrix is not unitary (deviation " +
                         std::to_string(dev) + ")");
  }
}

GateMatrix identity_gate(int arity) {
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<Amplitude> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return GateMatrix(arity, std::move(m));
}

GateMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return GateMatrix(1, {s, s, s, -s});
}

GateMatrix pauli_x() { return GateMatrix(1, {0, 1, 1, 0}); }

GateMatrix pauli_z() { return GateMatrix(1, {1, 0, 0, -1}); }

GateMatrix cnot() {
  return GateMatrix(2, {1, 0, 0, 0,   //
                        0, 1, 0, 0,   //
                        0, 0, 0, 1,   //
                        0, 0, 1, 0});
}

GateMatrix cz() {
  return GateMatrix(2, {1, 0, 0, 0,  //
                        0, 1, 0, 0,  //
                        0, 0, 1, 0,  //
                        0, 0, 0, -1});
}

GateMatrix toffoli() {
  std::vector<Amplitude> m(64, 0.0);
  for (std::size_t i = 0; i < 6; ++i) m[i * 8 + i] = 1.0;
  m[6 * 8 + 7] = 1.0;
  m[7 * 8 + 6] = 1.0;
  return GateMatrix(3, std::move(m));
}

GateMatrix conditional_phase_zero(int qubit_count) {
  if (qubit_count < 1) {
    throw InvalidQubitCount("qubit count must be positive, got " +
                            std::to_string(qubit_count));
  }
  if (qubit_count > kMaxExplicitMatrixQubits) {
    throw QubitCapExceeded("explicit matrices are limited to " +
                           std::to_string(kMaxExplicitMatrixQubits) +
                           " qubits, got " + std::to_string(qubit_count));
  }
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::vector<Amplitude> m(dim * dim, 0.0);
  m[0] = 1.0;
  for (std::size_t i = 1; i < dim; ++i) m[i * dim + i] = -1.0;
  return GateMatrix(qubit_count, std::move(m));
}

GateMatrix product(const GateMatrix& a, const GateMatrix& b) {
  if (a.arity() != b.arity()) {
    throw DimensionMismatch("cannot multiply a " + std::to_string(a.arity()) +
                            "-qubit gate by a " + std::to_string(b.arity()) +
                            "-qubit gate");
  }
  const std::size_t dim = a.dim();
  std::vector<Amplitude> m(dim * dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Amplitude ark = a.entry(r, k);
      if (ark == Amplitude{0.0}) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        m[r * dim + c] += ark * b.entry(k, c);
      }
    }
  }
  return GateMatrix(a.arity(), std::move(m));
}

GateMatrix tensor(const GateMatrix& a, const GateMatrix& b) {
  const int arity = a.arity() + b.arity();
  if (arity > kMaxExplicitMatrixQubits) {
    throw QubitCapExceeded("tensor product exceeds the " +
                           std::to_string(kMaxExplicitMatrixQubits) +
                           "-qubit explicit-matrix limit");
  }
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t dim = da * db;
  std::vector<Amplitude> m(dim * dim);
  for (std::size_t ra = 0; ra < da; ++ra) {
    for (std::size_t ca = 0; ca < da; ++ca) {
      for (std::size_t rb = 0; rb < db; ++rb) {
        for (std::size_t cb = 0; cb < db; ++cb) {
          m[(ra * db + rb) * dim + (ca * db + cb)] =
              a.entry(ra, ca) * b.entry(rb, cb);
        }
      }
    }
  }
  return GateMatrix(arity, std::move(m));
}

GateMatrix tensor_power(const GateMatrix& g, int count) {
  if (count < 1) {
    throw InvalidQubitCount("tensor power needs a positive count, got " +
                            std::to_string(count));
  }
  GateMatrix result = g;
  for (int i = 1; i < count; ++i) result = tensor(result, g);
  return result;
}

GateMatrix adjoint(const GateMatrix& g) {
  const std::size_t dim = g.dim();
  std::vector<Amplitude> m(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m[c * dim + r] = std::conj(g.entry(r, c));
    }
  }
  return GateMatrix(g.arity(), std::move(m));
}

double max_entry_difference(const GateMatrix& a, const GateMatrix& b) {
  if (a.arity() != b.arity()) {
    throw DimensionMismatch("cannot compare gates of different arity");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

CircuitFragment hadamard_layer(int qubit_count) {
  if (qubit_count < 1) {
    throw InvalidQubitCount("qubit count must be positive, got " +
                            std::to_string(qubit_count));
  }
  CircuitFragment layer;
  layer.reserve(static_cast<std::size_t>(qubit_count));
  for (int q = 0; q < qubit_count; ++q) {
    layer.push_back({hadamard(), {q}, "H q" + std::to_string(q)});
  }
  return layer;
}

}  // namespace grover
