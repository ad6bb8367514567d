// Command-line front end: simulate searches, sweep iteration counts,
// trace the four-item circuit, compare classical baselines, cross-check
// the oracle forms, and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "grover/baseline.hpp"
#include "grover/circuit4.hpp"
#include "grover/engine.hpp"
#include "grover/verify.hpp"

namespace {

using namespace grover;

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string bit_string(BasisIndex index, int qubit_count) {
  std::string bits(static_cast<std::size_t>(qubit_count), '0');
  for (int q = 0; q < qubit_count; ++q) {
    if ((index >> (qubit_count - 1 - q)) & 1) bits[q] = '1';
  }
  return bits;
}

// Marked-set grammar: comma-separated items, each a decimal index or a
// b-prefixed bit string of exactly n bits (first bit = qubit 0).
std::vector<BasisIndex> parse_marked(const std::string& text,
                                     int qubit_count) {
  std::vector<BasisIndex> indices;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) {
      throw InvalidMarkedString("empty item in marked set \"" + text + "\"");
    }
    if (token[0] == 'b') {
      const std::string bits = token.substr(1);
      if (bits.size() != static_cast<std::size_t>(qubit_count) ||
          bits.find_first_not_of("01") != std::string::npos) {
        throw InvalidMarkedString("binary item \"" + token + "\" must be b" +
                                  std::to_string(qubit_count) + " bits of 0/1");
      }
      BasisIndex index = 0;
      for (const char bit : bits) index = index << 1 | (bit == '1' ? 1 : 0);
      indices.push_back(index);
      continue;
    }
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidMarkedString("marked item \"" + token +
                                "\" is neither decimal nor b-prefixed binary");
    }
    try {
      indices.push_back(std::stoull(token));
    } catch (const std::out_of_range&) {
      throw InvalidMarkedString("marked item \"" + token + "\" overflows");
    }
  }
  return indices;
}

std::pair<std::int64_t, std::int64_t> parse_sweep(const std::string& text) {
  const std::size_t dots = text.find("..");
  std::size_t used_a = 0;
  std::size_t used_b = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  try {
    if (dots == std::string::npos) throw std::invalid_argument("no ..");
    a = std::stoll(text.substr(0, dots), &used_a);
    const std::string tail = text.substr(dots + 2);
    b = std::stoll(tail, &used_b);
    if (used_a != dots || used_b != tail.size()) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    throw InvalidSize("sweep range must look like A..B, got \"" + text + "\"");
  }
  if (a < 0 || b < a) {
    throw InvalidSize("sweep range must satisfy 0 <= A <= B, got \"" + text +
                      "\"");
  }
  return {a, b};
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file \"" + path + "\"");
  out << payload;
  if (!out.flush()) throw Error("write to \"" + path + "\" failed");
}

std::string format_term(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", std::abs(value));
  return buffer;
}

std::string format_state(const StateVector& state) {
  std::string out;
  for (BasisIndex i = 0; i < state.dimension(); ++i) {
    const Amplitude amp = state.amplitude(i);
    if (std::abs(amp) < 1e-12) continue;
    if (!out.empty()) out += ' ';
    if (std::abs(amp.imag()) < 1e-12) {
      out += amp.real() < 0 ? '-' : '+';
      out += format_term(amp.real());
    } else {
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "+(%.10g%+.10gi)", amp.real(),
                    amp.imag());
      out += buffer;
    }
    out += '|' + bit_string(i, state.qubit_count()) + '>';
  }
  return out.empty() ? "0" : out;
}

std::string trajectory_csv(const RunResult& result, std::int64_t from,
                           std::int64_t to) {
  const std::uint64_t n = result.plan.search_space;
  const std::uint64_t m = result.plan.solution_count;
  const double marked_scale = std::sqrt(static_cast<double>(m));
  const double unmarked_scale =
      m == n ? 0.0 : std::sqrt(static_cast<double>(n - m));
  std::string csv =
      "iteration,success_probability,marked_amplitude,unmarked_amplitude,"
      "analytic_probability\n";
  char line[192];
  for (std::int64_t k = from; k <= to; ++k) {
    const TrajectoryPoint& point =
        result.trajectory[static_cast<std::size_t>(k)];
    const double marked_amp = point.beta_coefficient / marked_scale;
    const double unmarked_amp =
        m == n ? 0.0 : point.alpha_coefficient / unmarked_scale;
    std::snprintf(line, sizeof line, "%lld,%.12g,%.12g,%.12g,%.12g\n",
                  static_cast<long long>(point.iteration),
                  point.success_probability, marked_amp, unmarked_amp,
                  success_probability(result.plan.theta, k));
    csv += line;
  }
  return csv;
}

struct RunConfig {
  int n = 0;
  std::string marked;
  std::optional<std::int64_t> iterations;
  std::string sweep;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

int cmd_run(const RunConfig& config) {
  const MarkedSet marked(config.n, parse_marked(config.marked, config.n));
  const RunResult result = run(marked, config.iterations);

  if (config.format == "csv") {
    write_output(trajectory_csv(
                     result, 0,
                     static_cast<std::int64_t>(result.trajectory.size()) - 1),
                 config.out);
    return 0;
  }

  const GroverPlan& p = result.plan;
  const MeasurementOutcome sampled =
      sample_measurement(result.final_state, config.seed);
  char buffer[256];
  std::string report;
  std::snprintf(buffer, sizeof buffer,
                "search space N = %llu (n = %d qubits), marked items M = %zu\n",
                static_cast<unsigned long long>(p.search_space), config.n,
                marked.count());
  report += buffer;
  std::snprintf(buffer, sizeof buffer, "theta = %.12g rad (%.2f deg)\n",
                p.theta, p.theta * kRadToDeg);
  report += buffer;
  std::snprintf(buffer, sizeof buffer,
                "rotation per iteration = %.12g rad (%.2f deg)\n", 2 * p.theta,
                2 * p.theta * kRadToDeg);
  report += buffer;
  std::snprintf(buffer, sizeof buffer, "optimal iterations = %lld\n",
                static_cast<long long>(p.iterations));
  report += buffer;
  std::snprintf(buffer, sizeof buffer,
                "predicted success at optimum = %.12f\n", p.predicted_success);
  report += buffer;
  std::snprintf(buffer, sizeof buffer, "iterations executed = %lld\n",
                static_cast<long long>(result.trajectory.size()) - 1);
  report += buffer;
  std::snprintf(buffer, sizeof buffer, "final success probability = %.12f\n",
                result.trajectory.back().success_probability);
  report += buffer;
  std::snprintf(buffer, sizeof buffer, "oracle queries = %lld\n",
                static_cast<long long>(result.query_count));
  report += buffer;
  std::snprintf(buffer, sizeof buffer,
                "sampled outcome = |%s> with probability %.12f (seed %llu)\n",
                bit_string(sampled.basis, config.n).c_str(),
                sampled.probability,
                static_cast<unsigned long long>(config.seed));
  report += buffer;
  write_output(report, config.out);
  return 0;
}

int cmd_sweep(const RunConfig& config) {
  const auto [from, to] = parse_sweep(config.sweep);
  const MarkedSet marked(config.n, parse_marked(config.marked, config.n));
  const RunResult result = run(marked, to);

  for (std::int64_t k = from; k <= to; ++k) {
    const double simulated =
        result.trajectory[static_cast<std::size_t>(k)].success_probability;
    const double analytic = success_probability(result.plan.theta, k);
    if (std::abs(simulated - analytic) > 1e-10) {
      std::fprintf(stderr,
                   "simulated/analytic disagreement at k=%lld: %.15g vs "
                   "%.15g\n",
                   static_cast<long long>(k), simulated, analytic);
      return 1;
    }
  }

  if (config.format == "text") {
    std::string table =
        "iteration  simulated       marked_amp      unmarked_amp    "
        "analytic\n";
    char line[192];
    const std::uint64_t n = result.plan.search_space;
    const std::uint64_t m = result.plan.solution_count;
    for (std::int64_t k = from; k <= to; ++k) {
      const TrajectoryPoint& point =
          result.trajectory[static_cast<std::size_t>(k)];
      const double marked_amp =
          point.beta_coefficient / std::sqrt(static_cast<double>(m));
      const double unmarked_amp =
          m == n ? 0.0
                 : point.alpha_coefficient /
                       std::sqrt(static_cast<double>(n - m));
      std::snprintf(line, sizeof line, "%-9lld  %.12f  %+.12f  %+.12f  %.12f\n",
                    static_cast<long long>(k), point.success_probability,
                    marked_amp, unmarked_amp,
                    success_probability(result.plan.theta, k));
      table += line;
    }
    write_output(table, config.out);
    return 0;
  }

  write_output(trajectory_csv(result, from, to), config.out);
  return 0;
}

int run_circuit_report(std::string_view marked, OracleStyle style) {
  const char* style_name =
      style == OracleStyle::Toffoli ? "toffoli" : "simplified c-z";
  const CircuitSpec spec = build_circuit(marked, style);
  std::vector<StageRecord> trace;
  const CircuitOutcome outcome = run_circuit(spec, &trace);
  std::printf("circuit for marked=%.*s, oracle style %s\n",
              static_cast<int>(marked.size()), marked.data(), style_name);
  for (const StageRecord& record : trace) {
    std::printf("  %-14s %s\n", record.label.c_str(),
                format_state(record.state).c_str());
  }
  const bool ok = outcome.output_string == marked;
  std::printf("output ab = %s, expected %.*s: %s\n",
              outcome.output_string.c_str(), static_cast<int>(marked.size()),
              marked.data(), ok ? "PASS" : "FAIL");
  std::printf("oracle calls = %d\n\n", oracle_call_count(spec));
  return ok ? 0 : 1;
}

int cmd_circuit4(const std::string& marked, const std::string& style_text) {
  int status = 0;
  if (style_text == "toffoli" || style_text == "both") {
    status |= run_circuit_report(marked, OracleStyle::Toffoli);
  }
  if (style_text == "cz" || style_text == "both") {
    status |= run_circuit_report(marked, OracleStyle::SimplifiedCz);
  }
  return status;
}

int cmd_baseline(int n, std::optional<std::uint64_t> trials,
                 std::uint64_t seed) {
  if (n < 1 || n > 62) {
    throw InvalidSize("qubit count must lie in 1..62, got " +
                      std::to_string(n));
  }
  const std::uint64_t search_space = std::uint64_t{1} << n;
  std::printf("classical baseline for N = %llu (n = %d qubits)\n",
              static_cast<unsigned long long>(search_space), n);
  std::printf("expected queries, sequential deduction = %.12f\n",
              classical_baseline(search_space,
                                 ClassicalStrategy::SequentialDeduce)
                  .expected_queries);
  std::printf("expected queries, random distinct probes = %.12f\n",
              classical_baseline(search_space,
                                 ClassicalStrategy::RandomDistinct)
                  .expected_queries);
  std::printf("probes for even odds = %llu\n",
              static_cast<unsigned long long>(search_space / 2));
  const ClassicalComparison comparison = classical_comparison(search_space);
  std::printf("quantum queries at the optimum = %lld\n",
              static_cast<long long>(comparison.quantum_queries));
  if (trials) {
    std::printf("monte carlo estimate (%llu trials, seed %llu) = %.6f\n",
                static_cast<unsigned long long>(*trials),
                static_cast<unsigned long long>(seed),
                monte_carlo_queries(search_space, *trials, seed));
  }
  return 0;
}

int cmd_oracle_check(int n, const std::string& marked_text, int states,
                     std::uint64_t seed) {
  const MarkedSet marked(n, parse_marked(marked_text, n));
  const KickbackReport kickback =
      kickback_equivalence_check(marked, states, seed);
  std::printf("kickback check over %d random states: max deviation %.3g %s\n",
              states, kickback.max_deviation,
              kickback.equivalent ? "PASS" : "FAIL");
  bool ok = kickback.equivalent;

  if (n <= kMaxExplicitMatrixQubits) {
    const GateMatrix matrix = oracle_matrix(marked);
    std::vector<int> all_targets;
    for (int q = 0; q < n; ++q) all_targets.push_back(q);
    std::mt19937_64 rng(seed + 1);
    double worst = 0.0;
    for (int i = 0; i < states; ++i) {
      const StateVector state = random_state(n, rng);
      worst = std::max(worst, max_amplitude_difference(
                                  apply_gate(state, matrix, all_targets),
                                  phase_oracle_apply(state, marked)));
    }
    const bool matrix_ok = worst < 1e-12;
    std::printf(
        "matrix cross-check over %d random states: max deviation %.3g %s\n",
        states, worst, matrix_ok ? "PASS" : "FAIL");
    ok = ok && matrix_ok;
  } else {
    std::printf("matrix cross-check skipped (n > %d)\n",
                kMaxExplicitMatrixQubits);
  }
  return ok ? 0 : 1;
}

int cmd_verify() {
  const std::vector<VerifyRow> rows = acceptance_rows();
  print_verification_table(std::cout, rows);
  return all_rows_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap_text = std::getenv("GROVER_MAX_QUBITS")) {
    char* end = nullptr;
    const long cap = std::strtol(cap_text, &end, 10);
    if (end == cap_text || *end != '\0') {
      std::cerr << "error: GROVER_MAX_QUBITS must be an integer, got \""
                << cap_text << "\"\n";
      return 2;
    }
    try {
      set_max_qubits(static_cast<int>(cap));
    } catch (const Error& error) {
      std::cerr << "error: " << error.what() << '\n';
      return 2;
    }
  }

  CLI::App app{"Grover search simulator and analysis toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::string run_format = "text";
  std::string sweep_format = "csv";
  std::string circuit_marked;
  std::string circuit_style = "both";
  std::optional<std::uint64_t> baseline_trials;
  std::uint64_t baseline_seed = 1;
  int check_states = 100;
  std::uint64_t check_seed = 0x5eed;

  CLI::App* run_cmd =
      app.add_subcommand("run", "Simulate a search and report the outcome");
  run_cmd->add_option("--n", config.n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, 62));
  run_cmd->add_option("--marked", config.marked,
                      "Marked set: decimal indices and/or b-prefixed "
                      "bit strings, comma separated")
      ->required();
  run_cmd->add_option("--iterations", config.iterations,
                      "Iteration count override (default: the optimum)");
  run_cmd->add_option("--seed", config.seed, "Seed for the sampled outcome");
  run_cmd->add_option("--out", config.out, "Output file (default: stdout)");
  run_cmd->add_option("--format", run_format, "Report format, default text")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Tabulate success probability over an iteration range");
  sweep_cmd->add_option("--n", config.n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, 62));
  sweep_cmd->add_option("--marked", config.marked, "Marked set")->required();
  sweep_cmd->add_option("--sweep", config.sweep, "Iteration range A..B")
      ->required();
  sweep_cmd->add_option("--out", config.out, "Output file (default: stdout)");
  sweep_cmd->add_option("--format", sweep_format, "Report format, default csv")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* circuit_cmd = app.add_subcommand(
      "circuit4", "Trace the hard-wired four-item search circuit");
  circuit_cmd
      ->add_option("--marked", circuit_marked, "Two-bit marked string")
      ->required();
  circuit_cmd->add_option("--oracle", circuit_style, "Oracle style")
      ->check(CLI::IsMember({"toffoli", "cz", "both"}))
      ->default_val("both");

  CLI::App* baseline_cmd = app.add_subcommand(
      "baseline", "Classical query costs for the same search");
  baseline_cmd->add_option("--n", config.n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, 62));
  baseline_cmd->add_option("--trials", baseline_trials,
                           "Monte Carlo trial count (omit to skip)");
  baseline_cmd->add_option("--seed", baseline_seed, "Monte Carlo seed");

  CLI::App* check_cmd = app.add_subcommand(
      "oracle-check", "Cross-check the bit-flip and phase oracle forms");
  check_cmd->add_option("--n", config.n, "Qubit count")
      ->required()
      ->check(CLI::Range(1, 62));
  check_cmd->add_option("--marked", config.marked, "Marked set")->required();
  check_cmd->add_option("--states", check_states, "Random states per check")
      ->check(CLI::Range(1, 100000));
  check_cmd->add_option("--seed", check_seed, "Seed for the random states");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& success) {
    return app.exit(success);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (*run_cmd) {
      config.format = run_format;
      return cmd_run(config);
    }
    if (*sweep_cmd) {
      config.format = sweep_format;
      return cmd_sweep(config);
    }
    if (*circuit_cmd) return cmd_circuit4(circuit_marked, circuit_style);
    if (*baseline_cmd) return cmd_baseline(config.n, baseline_trials,
                                           baseline_seed);
    if (*check_cmd) return cmd_oracle_check(config.n, config.marked,
                                            check_states, check_seed);
    if (*verify_cmd) return cmd_verify();
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 2;
}
