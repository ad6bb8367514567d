#pragma once

#include <cstdint>
#include <vector>

#include "grover/errors.hpp"

namespace grover {

// Rotation-picture view of the search: the state after k iterations is
// cos((2k+1)theta)|non-solutions> + sin((2k+1)theta)|solutions> with
// sin(theta) = sqrt(M/N).
struct RotationState {
  double theta;
  std::int64_t iteration;
  double alpha_coefficient;  // cos((2k+1) theta)
  double beta_coefficient;   // sin((2k+1) theta)
};

// theta = arcsin(sqrt(M/N)), in (0, pi/2]. N must be a power of two.
double theta_of(std::uint64_t search_space, std::uint64_t solution_count);

// round(pi/(4 theta) - 1/2), ties rounded up.
std::int64_t optimal_iterations(double theta);

// sin^2((2k+1) theta).
double success_probability(double theta, std::int64_t iteration);

RotationState rotation_state(double theta, std::int64_t iteration);

struct SuccessPoint {
  std::int64_t iteration;
  double probability;
};

// Closed-form success curve for k = 0 .. k_max.
std::vector<SuccessPoint> success_curve(std::uint64_t search_space,
                                        std::uint64_t solution_count,
                                        std::int64_t k_max);

struct ClassicalComparison {
  std::uint64_t search_space;
  std::int64_t quantum_queries;     // optimal iteration count, M = 1
  double classical_expected;        // (N-1)(N+2)/(2N) sequential probes
  std::uint64_t classical_for_half; // N/2 probes reach success 1/2
};

ClassicalComparison classical_comparison(std::uint64_t search_space);

}  // namespace grover
