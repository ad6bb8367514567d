#include "grover/engine.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace grover {

namespace {

constexpr double kRealTolerance = 1e-12;

double real_checked(const Amplitude& value, const char* what) {
  if (std::abs(value.imag()) >= kRealTolerance) {
    throw Error(std::string(what) + " has a non-real value (imag " +
                std::to_string(value.imag()) + ")");
  }
  return value.real();
}

TrajectoryPoint trajectory_point(const StateVector& state,
                                 const MarkedSet& marked,
                                 std::int64_t iteration) {
  const std::uint64_t n = state.dimension();
  const std::uint64_t m = marked.count();
  Amplitude marked_sum = 0.0;
  Amplitude total_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) total_sum += state.amplitudes()[i];
  for (BasisIndex i : marked.indices()) marked_sum += state.amplitudes()[i];
  const Amplitude beta = marked_sum / std::sqrt(static_cast<double>(m));
  const Amplitude alpha =
      m == n ? Amplitude{0.0}
             : (total_sum - marked_sum) / std::sqrt(static_cast<double>(n - m));
  return {iteration, probability_of(state, marked.indices()),
          real_checked(alpha, "non-solution coefficient"),
          real_checked(beta, "solution coefficient")};
}

}  // namespace

GroverPlan plan(std::uint64_t search_space, std::uint64_t solution_count) {
  const double theta = theta_of(search_space, solution_count);
  const std::int64_t k = optimal_iterations(theta);
  return {search_space, solution_count, theta, k,
          success_probability(theta, k)};
}

StateVector diffusion_apply(const StateVector& state) {
  // The mean is compensated: its rounding error enters every amplitude
  // coherently, and iterated runs must stay normalised within 1e-12.
  Amplitude sum = 0.0;
  Amplitude carry = 0.0;
  for (const Amplitude& a : state.amplitudes()) {
    const Amplitude term = a - carry;
    const Amplitude next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  const Amplitude mean = sum / static_cast<double>(state.dimension());
  std::vector<Amplitude> amps(state.dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = 2.0 * mean - state.amplitudes()[i];
  }
  return StateVector(state.qubit_count(), std::move(amps));
}

GateMatrix diffusion_matrix(int qubit_count) {
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
  const double off = 2.0 / static_cast<double>(dim);
  std::vector<Amplitude> m(dim * dim, off);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = off - 1.0;
  return GateMatrix(qubit_count, std::move(m));
}

StateVector grover_iterate(const StateVector& state, const MarkedSet& marked) {
  if (marked.empty()) {
    throw NoSolutions("search needs at least one marked state");
  }
  return diffusion_apply(phase_oracle_apply(state, marked));
}

RunResult run(const MarkedSet& marked,
              std::optional<std::int64_t> iterations) {
  if (marked.empty()) {
    throw NoSolutions("search needs at least one marked state");
  }
  const GroverPlan search_plan = plan(marked.search_space(), marked.count());
  const std::int64_t k = iterations.value_or(search_plan.iterations);
  if (k < 0) {
    throw InvalidSize("iteration count must be non-negative, got " +
                      std::to_string(k));
  }

  StateVector state = uniform_state(marked.qubit_count());
  std::vector<TrajectoryPoint> trajectory;
  trajectory.reserve(static_cast<std::size_t>(k) + 1);
  trajectory.push_back(trajectory_point(state, marked, 0));
  std::int64_t queries = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    state = grover_iterate(state, marked);
    ++queries;
    trajectory.push_back(trajectory_point(state, marked, i));
  }
  return {search_plan, std::move(state), std::move(trajectory), queries};
}

std::vector<GrowthRecord> amplitude_growth_report(const MarkedSet& marked,
                                                  std::int64_t steps) {
  if (marked.empty()) {
    throw NoSolutions("growth report needs a marked state");
  }
  if (marked.count() > 1) {
    throw MultipleSolutionsUnsupported(
        "growth report covers the single-solution case only");
  }
  if (steps < 0) {
    throw InvalidSize("step count must be non-negative, got " +
                      std::to_string(steps));
  }
  // With one solution every unmarked amplitude stays equal to every other,
  // so the whole evolution reduces to two real amplitudes and their mean.
  const double n = static_cast<double>(marked.search_space());
  double marked_amp = 1.0 / std::sqrt(n);
  double unmarked_amp = marked_amp;
  std::vector<GrowthRecord> report;
  report.reserve(static_cast<std::size_t>(steps));
  for (std::int64_t step = 1; step <= steps; ++step) {
    marked_amp = -marked_amp;
    const double mean = ((n - 1.0) * unmarked_amp + marked_amp) / n;
    marked_amp = 2.0 * mean - marked_amp;
    unmarked_amp = 2.0 * mean - unmarked_amp;
    report.push_back({step, marked_amp, unmarked_amp, mean});
  }
  return report;
}

}  // namespace grover
