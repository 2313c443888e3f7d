#include "unitsum/grid.hpp"

#include <stdexcept>

namespace unitsum {

PuzzleSpec PuzzleSpec::latin(int n) {
  if (n < 1) {
    throw std::domain_error("order must be at least 1, got " + std::to_string(n));
  }
  return PuzzleSpec(PuzzleKind::Latin, n, 0, 0);
}

PuzzleSpec PuzzleSpec::sudoku(int n, int l, int m) {
  if (n < 1) {
    throw std::domain_error("order must be at least 1, got " + std::to_string(n));
  }
  if (l < 1 || m < 1) {
    throw std::domain_error("block dimensions must be positive");
  }
  if (l * m != n) {
    throw std::domain_error("block size " + std::to_string(l) + "x" + std::to_string(m) +
                            " does not match order " + std::to_string(n));
  }
  return PuzzleSpec(PuzzleKind::Sudoku, n, l, m);
}

int PuzzleSpec::block_rows() const {
  if (!is_sudoku()) throw std::logic_error("latin squares have no blocks");
  return l_;
}

int PuzzleSpec::block_cols() const {
  if (!is_sudoku()) throw std::logic_error("latin squares have no blocks");
  return m_;
}

std::string PuzzleSpec::describe() const {
  if (is_sudoku()) {
    return "sudoku " + std::to_string(n_) + " " + std::to_string(l_) + " " + std::to_string(m_);
  }
  return "latin " + std::to_string(n_);
}

int cell_to_flat(int i, int j, int n) {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n) {
    throw std::domain_error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside order " + std::to_string(n));
  }
  return (i - 1) * n + j;
}

CellIndex flat_to_cell(int k, int n) {
  if (n < 1 || k < 1 || k > n * n) {
    throw std::domain_error("flat index " + std::to_string(k) + " outside order " + std::to_string(n));
  }
  const int j = 1 + (k - 1) % n;
  const int i = (k - j) / n + 1;
  return {i, j, k};
}

CellIndex make_cell(int i, int j, int n) { return {i, j, cell_to_flat(i, j, n)}; }

std::string to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Row:
      return "row";
    case UnitKind::Column:
      return "column";
    case UnitKind::Block:
      return "block";
  }
  return "unit";
}

std::vector<Unit> units_of(const PuzzleSpec& spec) {
  const int n = spec.order();
  std::vector<Unit> units;
  units.reserve(static_cast<std::size_t>(spec.unit_count()));

  for (int j = 1; j <= n; ++j) {
    Unit u{UnitKind::Column, j, {}};
    for (int i = 1; i <= n; ++i) u.members.push_back(make_cell(i, j, n));
    units.push_back(std::move(u));
  }
  for (int i = 1; i <= n; ++i) {
    Unit u{UnitKind::Row, i, {}};
    for (int j = 1; j <= n; ++j) u.members.push_back(make_cell(i, j, n));
    units.push_back(std::move(u));
  }
  if (spec.is_sudoku()) {
    const int l = spec.block_rows();
    const int m = spec.block_cols();
    for (int k = 0; k < n; ++k) {
      Unit u{UnitKind::Block, k + 1, {}};
      for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= m; ++j) {
          const int p = k - (k % l) + i;
          const int q = (k % l) * m + j;
          u.members.push_back(make_cell(p, q, n));
        }
      }
      units.push_back(std::move(u));
    }
  }
  return units;
}

int block_of(const PuzzleSpec& spec, int i, int j) {
  const int l = spec.block_rows();
  const int m = spec.block_cols();
  cell_to_flat(i, j, spec.order());
  // Inverts p = k - k mod l + i', q = (k mod l) m + j'.
  const int band = (i - 1) / l;
  const int stack = (j - 1) / m;
  return band * l + stack + 1;
}

Grid::Grid(PuzzleSpec spec, std::vector<int> cells) : spec_(spec), cells_(std::move(cells)) {
  const int n = spec_.order();
  if (cells_.size() != static_cast<std::size_t>(spec_.cell_count())) {
    throw std::domain_error("grid needs " + std::to_string(spec_.cell_count()) + " cells");
  }
  for (int v : cells_) {
    if (v < 1 || v > n) {
      throw std::domain_error("grid value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
  }
}

Grid Grid::from_rows(PuzzleSpec spec, const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<std::size_t>(spec.order());
  if (rows.size() != n) throw std::domain_error("grid needs " + std::to_string(n) + " rows");
  std::vector<int> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::domain_error("grid row needs " + std::to_string(n) + " values");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Grid(spec, std::move(cells));
}

std::size_t Grid::index(int i, int j) const {
  return static_cast<std::size_t>(cell_to_flat(i, j, spec_.order()) - 1);
}

std::vector<std::vector<int>> Grid::rows() const {
  const auto n = static_cast<std::size_t>(order());
  std::vector<std::vector<int>> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    out[r].assign(cells_.begin() + static_cast<std::ptrdiff_t>(r * n),
                  cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
  }
  return out;
}

Puzzle::Puzzle(PuzzleSpec spec, std::vector<std::optional<int>> cells)
    : spec_(spec), cells_(std::move(cells)) {
  const int n = spec_.order();
  if (cells_.size() != static_cast<std::size_t>(spec_.cell_count())) {
    throw std::domain_error("puzzle needs " + std::to_string(spec_.cell_count()) + " cells");
  }
  for (const auto& v : cells_) {
    if (v && (*v < 1 || *v > n)) {
      throw std::domain_error("clue " + std::to_string(*v) + " outside 1.." + std::to_string(n));
    }
  }
}

Puzzle Puzzle::empty(PuzzleSpec spec) {
  return Puzzle(spec, std::vector<std::optional<int>>(static_cast<std::size_t>(spec.cell_count())));
}

Puzzle Puzzle::from_grid(const Grid& grid) {
  std::vector<std::optional<int>> cells(grid.values().begin(), grid.values().end());
  return Puzzle(grid.spec(), std::move(cells));
}

Puzzle Puzzle::from_rows(PuzzleSpec spec, const std::vector<std::vector<int>>& rows) {
  const auto n = static_cast<std::size_t>(spec.order());
  if (rows.size() != n) throw std::domain_error("puzzle needs " + std::to_string(n) + " rows");
  std::vector<std::optional<int>> cells;
  cells.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::domain_error("puzzle row needs " + std::to_string(n) + " values");
    for (int v : row) {
      cells.push_back(v == 0 ? std::nullopt : std::optional<int>(v));
    }
  }
  return Puzzle(spec, std::move(cells));
}

std::size_t Puzzle::index(int i, int j) const {
  return static_cast<std::size_t>(cell_to_flat(i, j, spec_.order()) - 1);
}

void Puzzle::set(int i, int j, std::optional<int> value) {
  if (value && (*value < 1 || *value > order())) {
    throw std::domain_error("clue " + std::to_string(*value) + " outside 1.." + std::to_string(order()));
  }
  cells_[index(i, j)] = value;
}

int Puzzle::unknown_count() const noexcept {
  int count = 0;
  for (const auto& v : cells_) count += v ? 0 : 1;
  return count;
}

std::vector<CellIndex> Puzzle::unknowns() const {
  std::vector<CellIndex> out;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (!cells_[k]) out.push_back(flat_to_cell(static_cast<int>(k) + 1, order()));
  }
  return out;
}

std::optional<Grid> Puzzle::to_grid() const {
  std::vector<int> cells;
  cells.reserve(cells_.size());
  for (const auto& v : cells_) {
    if (!v) return std::nullopt;
    cells.push_back(*v);
  }
  return Grid(spec_, std::move(cells));
}

namespace {

// seen[v] flags per unit; true when some value repeats.
template <typename Lookup>
bool unit_has_duplicate(const Unit& unit, int n, Lookup value_at) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : unit.members) {
    const std::optional<int> v = value_at(c);
    if (!v) continue;
    if (seen[static_cast<std::size_t>(*v)]) return true;
    seen[static_cast<std::size_t>(*v)] = true;
  }
  return false;
}

}  // namespace

Validity validate_complete(const Grid& grid) {
  Validity verdict;
  for (const auto& unit : units_of(grid.spec())) {
    if (unit_has_duplicate(unit, grid.order(),
                           [&](CellIndex c) { return std::optional<int>(grid.at(c)); })) {
      verdict.violated.push_back({unit.kind, unit.index});
    }
  }
  return verdict;
}

bool partial_consistent(const Puzzle& puzzle) {
  for (const auto& unit : units_of(puzzle.spec())) {
    if (unit_has_duplicate(unit, puzzle.order(), [&](CellIndex c) { return puzzle.at(c); })) {
      return false;
    }
  }
  return true;
}

}  // namespace unitsum
