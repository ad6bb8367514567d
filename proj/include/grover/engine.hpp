#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grover/analytic.hpp"
#include "grover/oracle.hpp"

namespace grover {

struct GroverPlan {
  std::uint64_t search_space;
  std::uint64_t solution_count;
  double theta;               // arcsin(sqrt(M/N))
  std::int64_t iterations;    // round(pi/(4 theta) - 1/2), ties up
  double predicted_success;   // sin^2((2k+1) theta)
};

GroverPlan plan(std::uint64_t search_space, std::uint64_t solution_count);

// Inversion about the average: a -> 2*mean - a. O(N), no matrix formed.
StateVector diffusion_apply(const StateVector& state);

// Explicit diffusion matrix, entries 2/N - delta_ij. Limited to
// kMaxExplicitMatrixQubits.
GateMatrix diffusion_matrix(int qubit_count);

// One search iteration: phase oracle then diffusion. Costs one oracle query.
StateVector grover_iterate(const StateVector& state, const MarkedSet& marked);

// One trajectory record per completed iteration, starting at iteration 0
// (the uniform state, before any query). The state is spanned by
// |non-solutions> and |solutions>; both coefficients are real throughout.
struct TrajectoryPoint {
  std::int64_t iteration;
  double success_probability;
  double alpha_coefficient;  // on the uniform non-solution superposition
  double beta_coefficient;   // on the uniform solution superposition
};

struct RunResult {
  GroverPlan plan;
  StateVector final_state;
  std::vector<TrajectoryPoint> trajectory;
  std::int64_t query_count;
};

// Prepares the uniform state and iterates `iterations` times (the planned
// optimum when omitted), recording the trajectory.
RunResult run(const MarkedSet& marked,
              std::optional<std::int64_t> iterations = std::nullopt);

// Single-solution amplitude bookkeeping, one record per iteration: the
// common marked/unmarked amplitudes after the iteration and the mean
// amplitude after that iteration's oracle (the value reflected about).
struct GrowthRecord {
  std::int64_t step;
  double marked_amplitude;
  double unmarked_amplitude;
  double average;
};

std::vector<GrowthRecord> amplitude_growth_report(const MarkedSet& marked,
                                                  std::int64_t steps);

}  // namespace grover
