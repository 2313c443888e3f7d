#include "unitsum/engine.hpp"

#include <numeric>
#include <stdexcept>
#include <variant>

#include "unitsum/system.hpp"

namespace unitsum {

std::string to_string(SolveClass cls) {
  switch (cls) {
    case SolveClass::UniqueValid:
      return "unique_valid";
    case SolveClass::UniqueInvalid:
      return "unique_invalid";
    case SolveClass::Underdetermined:
      return "underdetermined";
    case SolveClass::Inconsistent:
      return "inconsistent";
  }
  return "unknown";
}

std::string Violation::describe() const {
  auto where = [this] {
    return "cell (" + std::to_string(cell->row) + "," + std::to_string(cell->col) + ")";
  };
  switch (kind) {
    case Kind::NonIntegral:
      return where() + " value " + format_rational(value) + " is not an integer";
    case Kind::OutOfRange:
      return where() + " value " + format_rational(value) + " is out of range";
    case Kind::DuplicateInUnit:
      return unit->name() + " repeats value " + format_rational(value);
  }
  return "violation";
}

namespace {

std::vector<Violation> second_check(const PuzzleSpec& spec, const std::vector<Rational>& x) {
  const int n = spec.order();
  std::vector<Violation> out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].get_den() != 1) {
      out.push_back({Violation::Kind::NonIntegral, flat_to_cell(static_cast<int>(k) + 1, n), x[k], {}});
    }
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].get_den() == 1 && (x[k] < 1 || x[k] > n)) {
      out.push_back({Violation::Kind::OutOfRange, flat_to_cell(static_cast<int>(k) + 1, n), x[k], {}});
    }
  }
  for (const auto& unit : units_of(spec)) {
    const auto& cells = unit.members;
    for (std::size_t a = 0; a < cells.size(); ++a) {
      const Rational& va = x[static_cast<std::size_t>(cells[a].flat - 1)];
      bool repeated = false;
      for (std::size_t b = 0; b < a && !repeated; ++b) {
        repeated = x[static_cast<std::size_t>(cells[b].flat - 1)] == va;
      }
      if (!repeated) {
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
          if (x[static_cast<std::size_t>(cells[b].flat - 1)] == va) {
            out.push_back({Violation::Kind::DuplicateInUnit, std::nullopt, va, UnitRef{unit.kind, unit.index}});
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

SolveOutcome linear_solve(const Puzzle& puzzle) {
  const PuzzleSpec& spec = puzzle.spec();
  SolveOutcome outcome;
  outcome.unknowns = puzzle.unknown_count();

  const ExactMatrix augmented = augment_with_clues(build_system(spec), puzzle);
  const RrefReport report = rref(augmented);
  outcome.rank = report.rank;
  if (!report.consistent) {
    outcome.cls = SolveClass::Inconsistent;
    return outcome;
  }

  auto solved = back_substitute(report);
  if (auto* under = std::get_if<Underdetermined>(&solved)) {
    outcome.cls = SolveClass::Underdetermined;
    for (auto c : under->free_cols) {
      outcome.free_cells.push_back(flat_to_cell(augmented.col_labels()[c], spec.order()));
    }
    return outcome;
  }

  outcome.assignment = std::move(std::get<std::vector<Rational>>(solved));
  outcome.violations = second_check(spec, outcome.assignment);
  if (!outcome.violations.empty()) {
    outcome.cls = SolveClass::UniqueInvalid;
    return outcome;
  }
  std::vector<int> cells;
  cells.reserve(outcome.assignment.size());
  for (const auto& v : outcome.assignment) cells.push_back(static_cast<int>(v.get_num().get_si()));
  outcome.solution = Grid(spec, std::move(cells));
  outcome.cls = SolveClass::UniqueValid;
  return outcome;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  // 2^64 mod bound values at the bottom of the range would bias the result.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

std::vector<int> identity(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Grouped permutation: groups of `width` consecutive indices are shuffled as
// blocks, then indices inside each original group are shuffled.
std::vector<int> grouped_permutation(SplitMix64& rng, int groups, int width) {
  std::vector<int> order = identity(groups);
  rng.shuffle(order);
  std::vector<std::vector<int>> inner(static_cast<std::size_t>(groups));
  for (int g = 0; g < groups; ++g) {
    inner[static_cast<std::size_t>(g)] = identity(width);
    rng.shuffle(inner[static_cast<std::size_t>(g)]);
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(groups * width));
  for (int g : order) {
    for (int r : inner[static_cast<std::size_t>(g)]) out.push_back(g * width + r);
  }
  return out;
}

}  // namespace

Grid generate_complete(const PuzzleSpec& spec, std::uint64_t seed) {
  const int n = spec.order();
  auto base = [&](int i, int j) {
    if (!spec.is_sudoku()) return (i + j) % n;
    const int l = spec.block_rows();
    const int m = spec.block_cols();
    return (m * (i % l) + i / l + j) % n;
  };

  std::vector<int> symbols = identity(n);
  std::vector<int> row_order = identity(n);
  std::vector<int> col_order = identity(n);
  if (seed != 0) {
    SplitMix64 rng(seed);
    rng.shuffle(symbols);
    if (spec.is_sudoku()) {
      const int l = spec.block_rows();
      const int m = spec.block_cols();
      row_order = grouped_permutation(rng, m, l);  // m bands of l rows
      col_order = grouped_permutation(rng, l, m);  // l stacks of m columns
    } else {
      rng.shuffle(row_order);
      rng.shuffle(col_order);
    }
  }

  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int v = base(row_order[static_cast<std::size_t>(r)], col_order[static_cast<std::size_t>(c)]);
      cells.push_back(symbols[static_cast<std::size_t>(v)] + 1);
    }
  }
  return Grid(spec, std::move(cells));
}

Puzzle derive_max_linear_puzzle(const Grid& grid) {
  const Validity verdict = validate_complete(grid);
  if (!verdict.valid()) {
    throw std::domain_error("grid violates " + verdict.violated.front().name());
  }
  Puzzle puzzle = Puzzle::from_grid(grid);
  for (const auto& cell : pivot_unknown_pattern(grid.spec())) puzzle.erase(cell.row, cell.col);
  return puzzle;
}

RankCondition classify_rank_condition(const Puzzle& puzzle) {
  RankCondition rc;
  rc.unknowns = puzzle.unknown_count();
  rc.bound = expected_rank(puzzle.spec());
  rc.within_bound = rc.unknowns <= rc.bound;
  return rc;
}

}  // namespace unitsum
