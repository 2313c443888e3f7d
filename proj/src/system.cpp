#include "unitsum/system.hpp"

#include <stdexcept>

namespace unitsum {

long unit_sum(int n) { return static_cast<long>(n) * (n + 1) / 2; }

UnitSystem build_system(const PuzzleSpec& spec) {
  UnitSystem system{spec, ExactMatrix(0, static_cast<std::size_t>(spec.cell_count())), units_of(spec)};
  const Rational s = unit_sum(spec.order());
  std::vector<Rational> coeffs(static_cast<std::size_t>(spec.cell_count()));
  for (const auto& unit : system.row_labels) {
    for (auto& c : coeffs) c = 0;
    for (const auto& cell : unit.members) coeffs[static_cast<std::size_t>(cell.flat - 1)] = 1;
    system.matrix.append_row(coeffs, s);
  }
  return system;
}

int expected_rank(const PuzzleSpec& spec) {
  const int n = spec.order();
  if (!spec.is_sudoku()) return 2 * n - 1;
  return 2 * n - 1 + (spec.block_rows() - 1) * (spec.block_cols() - 1);
}

std::vector<CellIndex> pivot_unknown_pattern(const PuzzleSpec& spec) {
  const int n = spec.order();
  std::vector<CellIndex> cells;
  for (int j = 1; j <= n; ++j) cells.push_back(make_cell(1, j, n));
  for (int i = 2; i <= n; ++i) {
    cells.push_back(make_cell(i, 1, n));
    if (!spec.is_sudoku()) continue;
    const int l = spec.block_rows();
    const int m = spec.block_cols();
    // Block corners in later bands, skipping the first stack.
    if ((i - 1) % l == 0 && i > l) {
      for (int j = m + 1; j <= n; j += m) cells.push_back(make_cell(i, j, n));
    }
  }
  return cells;
}

ExactMatrix augment_with_clues(const UnitSystem& system, const Puzzle& puzzle) {
  if (!(puzzle.spec() == system.spec)) {
    throw std::domain_error("puzzle " + puzzle.spec().describe() + " does not match system " +
                            system.spec.describe());
  }
  ExactMatrix out = system.matrix;
  std::vector<Rational> coeffs(out.coeff_cols());
  const auto& values = puzzle.values();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k]) continue;
    coeffs[k] = 1;
    out.append_row(coeffs, Rational(*values[k]));
    coeffs[k] = 0;
  }
  return out;
}

}  // namespace unitsum
