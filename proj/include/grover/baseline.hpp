#pragma once

#include <cstdint>

#include "grover/errors.hpp"

namespace grover {

// Classical strategies for finding the one marked item among N:
//  SequentialDeduce probes distinct items and deduces the last one for
//  free, so the worst case costs N-1 queries.
//  RandomDistinct probes distinct items in random order and must see the
//  marked item itself.
enum class ClassicalStrategy { SequentialDeduce, RandomDistinct };

struct BaselineResult {
  std::uint64_t search_space;
  ClassicalStrategy strategy;
  double expected_queries;
};

BaselineResult classical_baseline(std::uint64_t search_space,
                                  ClassicalStrategy strategy);

// (N-1)(N+2)/(2N): mean queries under SequentialDeduce.
double expected_queries_sequential(std::uint64_t search_space);

// Probability the item has been found after q distinct probes: q/N.
double success_probability_after(std::uint64_t search_space,
                                 std::uint64_t queries);

// Seeded simulation of SequentialDeduce over random probe orders.
double monte_carlo_queries(std::uint64_t search_space, std::uint64_t trials,
                           std::uint64_t seed);

}  // namespace grover
