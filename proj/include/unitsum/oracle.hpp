#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unitsum/engine.hpp"
#include "unitsum/grid.hpp"

namespace unitsum {

struct OracleResult {
  std::uint64_t count = 0;
  /// Enumeration stopped on reaching the cap; the true count is at least `count`.
  bool capped = false;
  /// First completions in enumeration order, at most the retention limit.
  std::vector<Grid> solutions;
};

inline constexpr std::size_t kDefaultRetention = 2;

/// Exhaustive backtracking over the unknown cells in flat order, candidates
/// ascending, pruning values already used in the cell's row, column or block.
/// Stops once `cap` completions have been found. Puzzles that already repeat
/// a clue inside a unit yield 0 immediately. Supports orders up to 63.
OracleResult count_completions(const Puzzle& puzzle, std::uint64_t cap,
                               std::size_t retention = kDefaultRetention);

struct Agreement {
  SolveOutcome linear;
  OracleResult oracle;
  /// UniqueValid needs exactly one completion equal to the linear solution;
  /// Inconsistent and UniqueInvalid need zero; Underdetermined accepts any
  /// count.
  bool agrees = false;
  std::string note;
};

/// Judges an already computed pair. A capped count of 1 cannot confirm
/// uniqueness and is reported as disagreement.
Agreement compare_with_oracle(SolveOutcome linear, OracleResult oracle);

/// Runs linear_solve and count_completions (cap raised to at least 2) and
/// compares them.
Agreement agrees_with_linear(const Puzzle& puzzle, std::uint64_t cap = 1000);

}  // namespace unitsum
