#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace unitsum {

enum class PuzzleKind { Latin, Sudoku };

/// Shape of a puzzle: kind, order n and (for Sudoku) the block size l x m.
///
/// Latin specs carry no block geometry; l and m are stored as 0 and the
/// block accessors throw std::logic_error.
class PuzzleSpec {
 public:
  static PuzzleSpec latin(int n);
  /// Throws std::domain_error unless n >= 1, l >= 1, m >= 1 and l * m == n.
  static PuzzleSpec sudoku(int n, int l, int m);

  PuzzleKind kind() const noexcept { return kind_; }
  bool is_sudoku() const noexcept { return kind_ == PuzzleKind::Sudoku; }
  int order() const noexcept { return n_; }
  int block_rows() const;
  int block_cols() const;

  int cell_count() const noexcept { return n_ * n_; }
  /// 2n for Latin squares, 3n for Sudokus.
  int unit_count() const noexcept { return (is_sudoku() ? 3 : 2) * n_; }

  std::string describe() const;

  friend bool operator==(const PuzzleSpec&, const PuzzleSpec&) = default;

 private:
  PuzzleSpec(PuzzleKind kind, int n, int l, int m) : kind_(kind), n_(n), l_(l), m_(m) {}

  PuzzleKind kind_;
  int n_;
  int l_;
  int m_;
};

/// A board position. Row and column are 1-based; flat = (row - 1) * n + col.
struct CellIndex {
  int row = 1;
  int col = 1;
  int flat = 1;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
  friend auto operator<=>(const CellIndex& a, const CellIndex& b) { return a.flat <=> b.flat; }
};

/// Row-major vectorization of the board. Throws std::domain_error when i or j
/// lies outside 1..n.
int cell_to_flat(int i, int j, int n);
/// Inverse of cell_to_flat. Throws std::domain_error when k lies outside 1..n².
CellIndex flat_to_cell(int k, int n);
CellIndex make_cell(int i, int j, int n);

enum class UnitKind { Row, Column, Block };

std::string to_string(UnitKind kind);

struct Unit {
  UnitKind kind = UnitKind::Row;
  int index = 1;
  std::vector<CellIndex> members;

  std::string name() const { return to_string(kind) + " " + std::to_string(index); }
};

/// Enumerates the units in equation order: columns 1..n, rows 1..n, then
/// (Sudoku only) blocks 1..n. Block u (k = u - 1) covers rows
/// k - k mod l + 1 .. k - k mod l + l and columns (k mod l) m + 1 .. (k mod l) m + m,
/// traversed row-major.
std::vector<Unit> units_of(const PuzzleSpec& spec);

/// Index (1-based) of the block holding cell (i, j) in the units_of ordering.
int block_of(const PuzzleSpec& spec, int i, int j);

/// A complete assignment; every cell holds a value in 1..n.
class Grid {
 public:
  /// Throws std::domain_error on a shape mismatch or a value outside 1..n.
  Grid(PuzzleSpec spec, std::vector<int> cells);
  static Grid from_rows(PuzzleSpec spec, const std::vector<std::vector<int>>& rows);

  const PuzzleSpec& spec() const noexcept { return spec_; }
  int order() const noexcept { return spec_.order(); }
  int at(int i, int j) const { return cells_[index(i, j)]; }
  int at(CellIndex c) const { return cells_[static_cast<std::size_t>(c.flat - 1)]; }
  /// Values in flat-index order (the vector x).
  const std::vector<int>& values() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int i, int j) const;

  PuzzleSpec spec_;
  std::vector<int> cells_;
};

/// A partial assignment; absent cells are unknowns.
class Puzzle {
 public:
  /// Throws std::domain_error on a shape mismatch or a present value outside 1..n.
  Puzzle(PuzzleSpec spec, std::vector<std::optional<int>> cells);
  static Puzzle empty(PuzzleSpec spec);
  static Puzzle from_grid(const Grid& grid);
  /// 0 marks an unknown cell.
  static Puzzle from_rows(PuzzleSpec spec, const std::vector<std::vector<int>>& rows);

  const PuzzleSpec& spec() const noexcept { return spec_; }
  int order() const noexcept { return spec_.order(); }
  std::optional<int> at(int i, int j) const { return cells_[index(i, j)]; }
  std::optional<int> at(CellIndex c) const { return cells_[static_cast<std::size_t>(c.flat - 1)]; }
  void set(int i, int j, std::optional<int> value);
  void erase(int i, int j) { set(i, j, std::nullopt); }

  const std::vector<std::optional<int>>& values() const noexcept { return cells_; }
  int unknown_count() const noexcept;
  int clue_count() const noexcept { return spec_.cell_count() - unknown_count(); }
  std::vector<CellIndex> unknowns() const;
  /// The completed grid when no cell is unknown.
  std::optional<Grid> to_grid() const;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;

 private:
  std::size_t index(int i, int j) const;

  PuzzleSpec spec_;
  std::vector<std::optional<int>> cells_;
};

struct UnitRef {
  UnitKind kind = UnitKind::Row;
  int index = 1;

  std::string name() const { return to_string(kind) + " " + std::to_string(index); }
  friend bool operator==(const UnitRef&, const UnitRef&) = default;
};

struct Validity {
  std::vector<UnitRef> violated;

  bool valid() const noexcept { return violated.empty(); }
};

/// Full combinatorial check: every unit holds n distinct values.
Validity validate_complete(const Grid& grid);

/// True iff no unit contains the same present value twice.
bool partial_consistent(const Puzzle& puzzle);

}  // namespace unitsum
