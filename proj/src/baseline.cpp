#include "grover/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace grover {

namespace {

void check_search_space(std::uint64_t search_space) {
  if (search_space < 2) {
    throw InvalidSize("search space must hold at least two items, got " +
                      std::to_string(search_space));
  }
}

}  // namespace

double expected_queries_sequential(std::uint64_t search_space) {
  check_search_space(search_space);
  const double n = static_cast<double>(search_space);
  return (n - 1.0) * (n + 2.0) / (2.0 * n);
}

BaselineResult classical_baseline(std::uint64_t search_space,
                                  ClassicalStrategy strategy) {
  check_search_space(search_space);
  const double n = static_cast<double>(search_space);
  const double expected = strategy == ClassicalStrategy::SequentialDeduce
                              ? expected_queries_sequential(search_space)
                              : (n + 1.0) / 2.0;
  return {search_space, strategy, expected};
}

double success_probability_after(std::uint64_t search_space,
                                 std::uint64_t queries) {
  check_search_space(search_space);
  if (queries > search_space) {
    throw InvalidSize("query count " + std::to_string(queries) +
                      " exceeds search space " + std::to_string(search_space));
  }
  return static_cast<double>(queries) / static_cast<double>(search_space);
}

double monte_carlo_queries(std::uint64_t search_space, std::uint64_t trials,
                           std::uint64_t seed) {
  check_search_space(search_space);
  if (trials == 0) {
    throw InvalidSize("trial count must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, search_space - 1);
  std::vector<std::uint64_t> order(search_space);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t total = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t marked = pick(rng);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint64_t q = 1; q <= search_space; ++q) {
      // The last probe is never issued: one unprobed item left means it
      // must be the marked one.
      if (q == search_space || order[q - 1] == marked) {
        total += std::min(q, search_space - 1);
        break;
      }
    }
  }
  return static_cast<double>(total) / static_cast<double>(trials);
}

}  // namespace grover
