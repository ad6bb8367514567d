#include "grover/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace grover {

namespace {

void check_sizes(std::uint64_t search_space, std::uint64_t solution_count) {
  if (search_space < 2 || (search_space & (search_space - 1)) != 0) {
    throw InvalidSize("search space must be a power of two >= 2, got " +
                      std::to_string(search_space));
  }
  if (solution_count == 0) {
    throw NoSolutions("solution count must be positive");
  }
  if (solution_count > search_space) {
    throw InvalidSize("solution count " + std::to_string(solution_count) +
                      " exceeds search space " + std::to_string(search_space));
  }
}

}  // namespace

double theta_of(std::uint64_t search_space, std::uint64_t solution_count) {
  check_sizes(search_space, solution_count);
  return std::asin(std::sqrt(static_cast<double>(solution_count) /
                             static_cast<double>(search_space)));
}

std::int64_t optimal_iterations(double theta) {
  if (!(theta > 0.0) || theta > std::numbers::pi / 2) {
    throw InvalidSize("theta must lie in (0, pi/2], got " +
                      std::to_string(theta));
  }
  // Half-up rounding; the argument is never negative for theta <= pi/2.
  const double raw = std::numbers::pi / (4.0 * theta) - 0.5;
  return static_cast<std::int64_t>(std::floor(raw + 0.5));
}

double success_probability(double theta, std::int64_t iteration) {
  const double s = std::sin(static_cast<double>(2 * iteration + 1) * theta);
  return s * s;
}

RotationState rotation_state(double theta, std::int64_t iteration) {
  const double angle = static_cast<double>(2 * iteration + 1) * theta;
  return {theta, iteration, std::cos(angle), std::sin(angle)};
}

std::vector<SuccessPoint> success_curve(std::uint64_t search_space,
                                        std::uint64_t solution_count,
                                        std::int64_t k_max) {
  if (k_max < 0) {
    throw InvalidSize("iteration bound must be non-negative, got " +
                      std::to_string(k_max));
  }
  const double theta = theta_of(search_space, solution_count);
  std::vector<SuccessPoint> curve;
  curve.reserve(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    curve.push_back({k, success_probability(theta, k)});
  }
  return curve;
}

ClassicalComparison classical_comparison(std::uint64_t search_space) {
  const double theta = theta_of(search_space, 1);
  const double n = static_cast<double>(search_space);
  return {search_space, optimal_iterations(theta),
          (n - 1.0) * (n + 2.0) / (2.0 * n), search_space / 2};
}

}  // namespace grover
