#include "grover/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "grover/baseline.hpp"
#include "grover/circuit4.hpp"
#include "grover/engine.hpp"

namespace grover {

namespace {

double to_degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

MarkedSet random_marked_set(int qubit_count, std::size_t count,
                            std::mt19937_64& rng) {
  const std::uint64_t dim = std::uint64_t{1} << qubit_count;
  std::vector<BasisIndex> pool(dim);
  for (std::uint64_t i = 0; i < dim; ++i) pool[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(count);
  return MarkedSet(qubit_count, std::move(pool));
}

struct RowBuilder {
  std::vector<VerifyRow> rows;

  void equals(int criterion, std::string name, double reference,
              double computed, double tolerance) {
    rows.push_back({criterion, std::move(name), CheckKind::Equals, reference,
                    computed, tolerance});
  }
  void at_most(int criterion, std::string name, double bound,
               double computed) {
    rows.push_back(
        {criterion, std::move(name), CheckKind::AtMost, bound, computed, 0.0});
  }
  void at_least(int criterion, std::string name, double bound,
                double computed) {
    rows.push_back({criterion, std::move(name), CheckKind::AtLeast, bound,
                    computed, 0.0});
  }
};

StateVector exact_real_state(int qubit_count, double marked_value,
                             double other_value, BasisIndex marked_index) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::vector<Amplitude> amps(dim, other_value);
  amps[marked_index] = marked_value;
  return StateVector(qubit_count, std::move(amps));
}

void walkthroughs(RowBuilder& b) {
  const double root2 = std::numbers::sqrt2;
  const MarkedSet marked(2, {3});
  const RunResult result = run(marked);  // planned optimum, k = 1
  b.equals(1, "N=4 success after 1 iteration", 1.0,
           result.trajectory.back().success_probability, 1e-12);
  b.at_most(1, "N=4 state deviation from |11>", 1e-12,
            max_amplitude_difference(result.final_state, basis_state(2, 3)));

  const MarkedSet marked8(3, {5});
  const StateVector after1 = grover_iterate(uniform_state(3), marked8);
  b.equals(2, "N=8 |101> amplitude after 1 iteration", 5.0 / (4.0 * root2),
           after1.amplitude(5).real(), 1e-12);
  b.equals(2, "N=8 other amplitudes after 1 iteration", 1.0 / (4.0 * root2),
           after1.amplitude(0).real(), 1e-12);
  b.at_most(2, "N=8 state deviation after 1 iteration", 1e-12,
            max_amplitude_difference(
                after1, exact_real_state(3, 5.0 / (4.0 * root2),
                                         1.0 / (4.0 * root2), 5)));
  b.equals(2, "N=8 overlap with uniform after 1 iteration", 0.75,
           inner_product(uniform_state(3), after1).real(), 1e-12);

  const RunResult run8 = run(marked8, 2);
  b.equals(2, "N=8 |101> amplitude after 2 iterations", 11.0 / (8.0 * root2),
           run8.final_state.amplitude(5).real(), 1e-12);
  b.equals(2, "N=8 other amplitudes after 2 iterations", -1.0 / (8.0 * root2),
           run8.final_state.amplitude(0).real(), 1e-12);
  b.at_most(2, "N=8 state deviation after 2 iterations", 1e-12,
            max_amplitude_difference(
                run8.final_state, exact_real_state(3, 11.0 / (8.0 * root2),
                                                   -1.0 / (8.0 * root2), 5)));
  b.equals(2, "N=8 success after 2 iterations", 121.0 / 128.0,
           run8.trajectory.back().success_probability, 1e-12);
  b.equals(2, "N=8 oracle queries for 2 iterations", 2.0,
           static_cast<double>(run8.query_count), 0.0);
}

void over_rotation(RowBuilder& b) {
  const MarkedSet marked8(3, {5});
  const RunResult sweep = run(marked8, 6);
  const auto& t = sweep.trajectory;
  b.equals(3, "N=8 success after 3 iterations", 169.0 / 512.0,
           t[3].success_probability, 1e-12);
  b.equals(3, "N=8 failure after 3 iterations", 343.0 / 512.0,
           1.0 - t[3].success_probability, 1e-12);
  const bool rises = t[0].success_probability < t[1].success_probability &&
                     t[1].success_probability < t[2].success_probability;
  const bool falls = t[2].success_probability > t[3].success_probability &&
                     t[3].success_probability > t[4].success_probability;
  b.equals(3, "N=8 sweep rises to k=2 then declines", 1.0,
           rises && falls ? 1.0 : 0.0, 0.0);
}

void angles(RowBuilder& b) {
  b.equals(4, "theta(4,1) in degrees", 30.0, to_degrees(theta_of(4, 1)),
           1e-12);
  const double theta8 = theta_of(8, 1);
  b.equals(4, "N=8 rotation per iteration in degrees", 41.41,
           to_degrees(2.0 * theta8), 0.01);
  b.equals(4, "N=8 cos of rotation per iteration", 0.75,
           std::cos(2.0 * theta8), 1e-12);
}

void iteration_counts(RowBuilder& b) {
  b.equals(5, "optimal iterations, N=4", 1.0,
           static_cast<double>(plan(4, 1).iterations), 0.0);
  b.equals(5, "optimal iterations, N=8", 2.0,
           static_cast<double>(plan(8, 1).iterations), 0.0);
  double worst = 0.0;
  for (int n = 2; n <= 16; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const GroverPlan p = plan(dim, 1);
    const double ideal =
        std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(dim));
    worst = std::max(worst,
                     std::abs(static_cast<double>(p.iterations) - ideal));
  }
  b.at_most(5, "max |k - (pi/4)sqrt(N)|, n=2..16", 1.0, worst);
}

void diffusion_decomposition(RowBuilder& b) {
  double worst_decomposition = 0.0;
  double worst_unitarity = 0.0;
  for (int n = 1; n <= kMaxExplicitMatrixQubits; ++n) {
    const GateMatrix d = diffusion_matrix(n);
    const GateMatrix h = tensor_power(hadamard(), n);
    const GateMatrix decomposed =
        product(product(h, conditional_phase_zero(n)), h);
    worst_decomposition =
        std::max(worst_decomposition, max_entry_difference(d, decomposed));
    worst_unitarity = std::max(
        worst_unitarity,
        max_entry_difference(product(d, adjoint(d)), identity_gate(n)));
  }
  b.at_most(6, "diffusion vs H-conjugated phase flip, n<=6", 1e-12,
            worst_decomposition);
  b.at_most(6, "diffusion unitarity, n<=6", 1e-12, worst_unitarity);
}

void inversion_about_average(RowBuilder& b) {
  std::mt19937_64 rng(0x1a2b3c4d);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 10;
    const StateVector state = random_state(n, rng);
    const StateVector reflected = diffusion_apply(state);
    Amplitude mean = 0.0;
    for (const Amplitude& a : state.amplitudes()) mean += a;
    mean /= static_cast<double>(state.dimension());
    for (std::size_t j = 0; j < state.dimension(); ++j) {
      const Amplitude residue =
          reflected.amplitudes()[j] + state.amplitudes()[j] - 2.0 * mean;
      worst = std::max(worst, std::abs(residue));
    }
  }
  b.at_most(7, "reflection residue a' + a - 2A, 1000 random states", 1e-12,
            worst);
}

void closed_form_grid(RowBuilder& b) {
  std::mt19937_64 rng(0x5caff01d);
  double worst = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::size_t m_cap =
        std::min<std::uint64_t>(dim, 32);
    for (std::size_t m = 1; m <= m_cap; ++m) {
      const MarkedSet marked = random_marked_set(n, m, rng);
      const double theta = theta_of(dim, m);
      const std::int64_t k_opt = optimal_iterations(theta);
      StateVector state = uniform_state(n);
      for (std::int64_t k = 0; k <= 2 * k_opt; ++k) {
        if (k > 0) state = grover_iterate(state, marked);
        const double simulated = probability_of(state, marked.indices());
        worst = std::max(
            worst, std::abs(simulated - success_probability(theta, k)));
      }
    }
  }
  b.at_most(8, "closed form vs simulation, n=2..12, M<=32, k<=2k_opt", 1e-10,
            worst);
}

void kickback(RowBuilder& b) {
  std::mt19937_64 rng(0xfeedbeef);
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::uniform_int_distribution<std::size_t> size_pick(1, dim - 1);
    const MarkedSet random_set = random_marked_set(n, size_pick(rng), rng);
    for (const MarkedSet& marked :
         {MarkedSet(n, {dim - 3}), random_set}) {
      const KickbackReport report =
          kickback_equivalence_check(marked, 100, rng());
      worst = std::max(worst, report.max_deviation);
    }
  }
  b.at_most(9, "bit vs phase oracle kickback deviation, n=2..4", 1e-12,
            worst);
}

void four_item_circuit(RowBuilder& b) {
  int correct = 0;
  double worst_deficit = 0.0;
  bool single_call = true;
  for (OracleStyle style : {OracleStyle::Toffoli, OracleStyle::SimplifiedCz}) {
    for (const char* marked : {"00", "01", "10", "11"}) {
      const CircuitSpec spec = build_circuit(marked, style);
      single_call = single_call && oracle_call_count(spec) == 1;
      const CircuitOutcome outcome = run_circuit(spec);
      if (outcome.output_string == marked && outcome.oracle_bit == 1) {
        ++correct;
      }
      worst_deficit = std::max(worst_deficit, 1.0 - outcome.outcome_probability);
      worst_deficit =
          std::max(worst_deficit, 1.0 - outcome.oracle_one_probability);
    }
  }
  b.equals(10, "four-item circuit correct outputs (of 8)", 8.0,
           static_cast<double>(correct), 0.0);
  b.at_most(10, "four-item circuit outcome probability deficit", 1e-12,
            worst_deficit);
  b.equals(10, "every four-item circuit makes one oracle call", 1.0,
           single_call ? 1.0 : 0.0, 0.0);
}

void classical_cost(RowBuilder& b) {
  b.equals(11, "classical expected queries, N=4", 2.25,
           expected_queries_sequential(4), 0.0);
  b.equals(11, "classical Monte Carlo mean, N=4, 100000 trials", 2.25,
           monte_carlo_queries(4, 100000, 20260819), 0.02);
}

void large_instance(RowBuilder& b) {
  const auto start = std::chrono::steady_clock::now();
  const MarkedSet marked(16, {40961});
  const RunResult result = run(marked);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  const double floor_probability = 1.0 - 2.0 / 65536.0;
  b.at_least(12, "n=16 success at the planned iteration count",
             floor_probability,
             result.trajectory.back().success_probability);
  double worst = 0.0;
  for (const TrajectoryPoint& point : result.trajectory) {
    worst = std::max(worst,
                     std::abs(point.success_probability -
                              success_probability(result.plan.theta,
                                                  point.iteration)));
  }
  b.at_most(12, "n=16 simulated vs closed form, all iterations", 1e-9, worst);
  b.at_most(12, "n=16 run wall time (seconds)", 10.0, elapsed.count());
}

}  // namespace

bool VerifyRow::passed() const {
  switch (kind) {
    case CheckKind::Equals:
      return std::abs(computed - reference) <= tolerance;
    case CheckKind::AtMost:
      return computed <= reference;
    case CheckKind::AtLeast:
      return computed >= reference;
  }
  return false;
}

double VerifyRow::delta() const {
  switch (kind) {
    case CheckKind::Equals:
      return std::abs(computed - reference);
    case CheckKind::AtMost:
      return std::max(0.0, computed - reference);
    case CheckKind::AtLeast:
      return std::max(0.0, reference - computed);
  }
  return 0.0;
}

std::string criterion_description(int criterion) {
  switch (criterion) {
    case 1:
      return "N=4 walkthrough reaches |11> with certainty";
    case 2:
      return "N=8 walkthrough amplitudes and success 121/128";
    case 3:
      return "over-rotation: success 169/512 at k=3, curve shape";
    case 4:
      return "angles: theta(4,1)=30 deg, N=8 rotation 41.41 deg";
    case 5:
      return "optimal iteration counts and (pi/4)sqrt(N) scaling";
    case 6:
      return "diffusion equals H-conjugated phase flip, unitary";
    case 7:
      return "diffusion is inversion about the average";
    case 8:
      return "simulation matches sin^2((2k+1)theta) on a grid";
    case 9:
      return "bit oracle and phase oracle agree via kickback";
    case 10:
      return "four-item circuit reads out the marked string";
    case 11:
      return "classical baseline: 2.25 expected queries at N=4";
    case 12:
      return "n=16 end-to-end run: accuracy and runtime";
    default:
      return "unknown criterion";
  }
}

std::vector<VerifyRow> acceptance_rows() {
  RowBuilder b;
  walkthroughs(b);
  over_rotation(b);
  angles(b);
  iteration_counts(b);
  diffusion_decomposition(b);
  inversion_about_average(b);
  closed_form_grid(b);
  kickback(b);
  four_item_circuit(b);
  classical_cost(b);
  large_instance(b);
  return std::move(b.rows);
}

bool all_rows_pass(const std::vector<VerifyRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerifyRow& row) { return row.passed(); });
}

std::vector<bool> criterion_results(const std::vector<VerifyRow>& rows) {
  std::vector<bool> results(kCriterionCount + 1, true);
  for (const VerifyRow& row : rows) {
    if (row.criterion >= 1 && row.criterion <= kCriterionCount &&
        !row.passed()) {
      results[row.criterion] = false;
    }
  }
  return results;
}

void print_verification_table(std::ostream& out,
                              const std::vector<VerifyRow>& rows) {
  char line[256];
  std::snprintf(line, sizeof(line), "%2s  %-52s %16s %16s %10s  %s", "#",
                "check", "reference", "computed", "|delta|", "result");
  out << line << '\n';
  for (const VerifyRow& row : rows) {
    const char* relation = row.kind == CheckKind::Equals   ? "="
                           : row.kind == CheckKind::AtMost ? "<="
                                                           : ">=";
    char reference[40];
    std::snprintf(reference, sizeof(reference), "%s %.10g", relation,
                  row.reference);
    std::snprintf(line, sizeof(line), "%2d  %-52s %16s %16.10g %10.3g  %s",
                  row.criterion, row.name.c_str(), reference, row.computed,
                  row.delta(), row.passed() ? "PASS" : "FAIL");
    out << line << '\n';
  }
  const std::vector<bool> results = criterion_results(rows);
  int passed = 0;
  for (int c = 1; c <= kCriterionCount; ++c) passed += results[c] ? 1 : 0;
  out << "criteria passed: " << passed << "/" << kCriterionCount << '\n';
}

}  // namespace grover
