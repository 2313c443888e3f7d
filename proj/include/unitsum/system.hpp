#pragma once

#include <vector>

#include "unitsum/grid.hpp"
#include "unitsum/linalg.hpp"

namespace unitsum {

/// The unit-sum equations of a puzzle shape: one row per unit, coefficient 1
/// on the unit's cells, right-hand side n(n+1)/2.
struct UnitSystem {
  PuzzleSpec spec;
  ExactMatrix matrix;
  std::vector<Unit> row_labels;
};

/// n(n+1)/2, the sum of every unit of a completed board.
long unit_sum(int n);

/// Rows follow units_of: columns, rows, then blocks.
UnitSystem build_system(const PuzzleSpec& spec);

/// 2n - 1 for Latin squares, 2n - 1 + (l - 1)(m - 1) for Sudokus.
int expected_rank(const PuzzleSpec& spec);

/// Cells whose variables are the pivots of the reduced unit system, in flat
/// order: the whole first row, the rest of the first column and, for Sudokus,
/// the top-left cell of every block that meets neither.
std::vector<CellIndex> pivot_unknown_pattern(const PuzzleSpec& spec);

/// Appends x_k = v for every clue, in flat-index order, below the unit rows.
/// Throws std::domain_error when the puzzle shape differs from the system's.
ExactMatrix augment_with_clues(const UnitSystem& system, const Puzzle& puzzle);

}  // namespace unitsum
