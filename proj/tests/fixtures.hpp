#pragma once

// Boards and matrices shared by the unit and acceptance tests.

#include <vector>

#include "unitsum/grid.hpp"
#include "unitsum/linalg.hpp"

namespace unitsum::fixtures {

inline PuzzleSpec latin4() { return PuzzleSpec::latin(4); }
inline PuzzleSpec sudoku4() { return PuzzleSpec::sudoku(4, 2, 2); }

// The completed order-4 square used throughout the worked examples; it is
// also a valid 2x2-block Sudoku.
inline const std::vector<std::vector<int>> kSolutionRows = {
    {1, 4, 3, 2},
    {3, 2, 1, 4},
    {4, 3, 2, 1},
    {2, 1, 4, 3},
};

inline const std::vector<int> kSolutionVector = {1, 4, 3, 2, 3, 2, 1, 4, 4, 3, 2, 1, 2, 1, 4, 3};

// Nine-clue puzzle whose completion is kSolutionRows (0 = unknown).
inline const std::vector<std::vector<int>> kNineCluePuzzle = {
    {1, 4, 0, 2},
    {3, 0, 1, 0},
    {0, 3, 0, 1},
    {0, 0, 4, 3},
};

// Latin pivot pattern blanked: row 1 and column 1 unknown, rank 7.
inline const std::vector<std::vector<int>> kLatinPivotPuzzle = {
    {0, 0, 0, 0},
    {0, 2, 1, 4},
    {0, 3, 2, 1},
    {0, 1, 4, 3},
};

// Sudoku pivot pattern blanked: additionally (3,3), rank 8.
inline const std::vector<std::vector<int>> kSudokuPivotPuzzle = {
    {0, 0, 0, 0},
    {0, 2, 1, 4},
    {0, 3, 0, 1},
    {0, 1, 4, 3},
};

// Latin square with the intercalate 1 2 / 2 1 in the top-left corner; blanking
// those four cells leaves exactly two completions.
inline const std::vector<std::vector<int>> kIntercalateGrid = {
    {1, 2, 3, 4},
    {2, 1, 4, 3},
    {3, 4, 1, 2},
    {4, 3, 2, 1},
};
inline const std::vector<std::vector<int>> kTwoSolutionLatin = {
    {0, 0, 3, 4},
    {0, 0, 4, 3},
    {3, 4, 1, 2},
    {4, 3, 2, 1},
};

// kSolutionRows with cells (1,1),(1,3),(2,1),(2,3) blanked: they hold
// 1 3 / 3 1 across two rows, two columns and two blocks, so the swapped
// assignment is a second valid Sudoku.
inline const std::vector<std::vector<int>> kTwoSolutionSudoku = {
    {0, 4, 0, 2},
    {0, 2, 0, 4},
    {4, 3, 2, 1},
    {2, 1, 4, 3},
};

// Reduced row echelon form of the order-4 Sudoku system, worked by hand
// (coefficients then right-hand side).
inline const std::vector<std::vector<int>> kSudoku4Reduced = {
    {1, 0, 0, 0, 0, -1, -1, -1, 0, -1, 0, 0, 0, -1, 0, 0, -10},
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 10},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, -1, 0},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 10},
    {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 10},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

/// Integer rows whose last entry is the right-hand side.
inline ExactMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size() - 1;
  ExactMatrix m(0, cols);
  std::vector<Rational> coeffs(cols);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols; ++c) coeffs[c] = r[c];
    m.append_row(coeffs, Rational(r.back()));
  }
  return m;
}

inline std::vector<Rational> to_rationals(const std::vector<int>& values) {
  return {values.begin(), values.end()};
}

/// Every order-n spec with n in [lo, hi]: the Latin spec and each ordered
/// factorization l * m = n with l, m >= min_block.
inline std::vector<PuzzleSpec> specs_up_to(int lo, int hi, int min_block = 1) {
  std::vector<PuzzleSpec> out;
  for (int n = lo; n <= hi; ++n) {
    out.push_back(PuzzleSpec::latin(n));
    for (int l = min_block; l <= n; ++l) {
      if (n % l == 0 && n / l >= min_block) out.push_back(PuzzleSpec::sudoku(n, l, n / l));
    }
  }
  return out;
}

}  // namespace unitsum::fixtures
