#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitsum/grid.hpp"
#include "unitsum/linalg.hpp"

namespace unitsum {

enum class SolveClass { UniqueValid, UniqueInvalid, Underdetermined, Inconsistent };

/// snake_case name used in reports: unique_valid, unique_invalid, ...
std::string to_string(SolveClass cls);

struct Violation {
  enum class Kind { NonIntegral, OutOfRange, DuplicateInUnit };

  Kind kind = Kind::NonIntegral;
  /// Set for NonIntegral and OutOfRange.
  std::optional<CellIndex> cell;
  Rational value;
  /// Set for DuplicateInUnit.
  std::optional<UnitRef> unit;

  std::string describe() const;
};

struct SolveOutcome {
  SolveClass cls = SolveClass::Inconsistent;
  /// UniqueValid only.
  std::optional<Grid> solution;
  /// The unique rational assignment in flat order (UniqueValid, UniqueInvalid).
  std::vector<Rational> assignment;
  /// Underdetermined only: cells of the non-pivot columns.
  std::vector<CellIndex> free_cells;
  /// UniqueInvalid only: integrality, then range, then unit failures.
  std::vector<Violation> violations;
  /// Rank of the clue-augmented coefficient matrix.
  std::size_t rank = 0;
  int unknowns = 0;
};

/// Unit system + clue rows -> RREF -> back substitution -> second check.
SolveOutcome linear_solve(const Puzzle& puzzle);

/// SplitMix64. Fixed algorithm so seeded output is reproducible anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection of the biased low range.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Fisher-Yates, i from size - 1 down to 1 swapping with below(i + 1).
  template <typename T>
  void shuffle(std::vector<T>& items) noexcept {
    for (std::size_t i = items.size(); i-- > 1;) {
      std::swap(items[i], items[static_cast<std::size_t>(below(i + 1))]);
    }
  }

 private:
  std::uint64_t state_;
};

/// A valid completed board. Seed 0 returns the base pattern
///   Latin:  ((i + j - 2) mod n) + 1
///   Sudoku: ((m ((i-1) mod l) + floor((i-1)/l) + (j-1)) mod n) + 1
/// Other seeds apply, in this order, a symbol permutation, then for Latin a
/// row and a column permutation, for Sudoku a band permutation, row
/// permutations inside each band, a stack permutation and column
/// permutations inside each stack.
Grid generate_complete(const PuzzleSpec& spec, std::uint64_t seed);

/// Blanks exactly the pivot_unknown_pattern cells of a valid grid.
/// Throws std::domain_error when the grid is not valid.
Puzzle derive_max_linear_puzzle(const Grid& grid);

struct RankCondition {
  int unknowns = 0;
  int bound = 0;
  /// Necessary for a full-rank solve, not sufficient.
  bool within_bound = true;
};

RankCondition classify_rank_condition(const Puzzle& puzzle);

}  // namespace unitsum
