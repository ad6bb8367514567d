#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grover {

// One checked value in the verification report. Equals rows compare
// against a reference within a tolerance; AtMost/AtLeast rows compare
// against a bound.
enum class CheckKind { Equals, AtMost, AtLeast };

struct VerifyRow {
  int criterion;  // 1-based group id
  std::string name;
  CheckKind kind;
  double reference;
  double computed;
  double tolerance;  // Equals rows only

  bool passed() const;
  double delta() const;  // how far past the reference/bound, 0 when inside
};

inline constexpr int kCriterionCount = 12;

// Short description of each criterion group, 1-based.
std::string criterion_description(int criterion);

// Evaluates the full verification suite. Deterministic: all randomness is
// seeded internally.
std::vector<VerifyRow> acceptance_rows();

bool all_rows_pass(const std::vector<VerifyRow>& rows);

// Per-criterion conjunction of row results, indexed 1..kCriterionCount.
std::vector<bool> criterion_results(const std::vector<VerifyRow>& rows);

void print_verification_table(std::ostream& out,
                              const std::vector<VerifyRow>& rows);

}  // namespace grover
