#include <gtest/gtest.h>

#include <algorithm>
#include <variant>

#include "fixtures.hpp"
#include "unitsum/engine.hpp"
#include "unitsum/linalg.hpp"
#include "unitsum/system.hpp"

namespace unitsum {
namespace {

// Test-only rank: fraction-free (Bareiss) elimination over integers with
// columns visited right to left and the bottom-most nonzero row as pivot.
// Shares nothing with rref() beyond the input.
std::size_t bareiss_rank(const std::vector<std::vector<long>>& input) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& row : input) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<bool> used(rows, false);
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t ci = cols; ci-- > 0;) {
    std::size_t p = rows;
    for (std::size_t i = rows; i-- > 0;) {
      if (!used[i] && a[i][ci] != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    used[p] = true;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i]) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == ci) continue;
        a[i][c] = (a[p][ci] * a[i][c] - a[i][ci] * a[p][c]) / prev;
      }
      a[i][ci] = 0;
    }
    prev = a[p][ci];
    ++r;
  }
  return r;
}

ExactMatrix from_longs(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.front().size();
  ExactMatrix m(0, cols);
  std::vector<Rational> coeffs(cols);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols; ++c) coeffs[c] = r[c];
    m.append_row(coeffs, Rational(0));
  }
  return m;
}

std::vector<std::vector<long>> random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
  for (auto& row : m) {
    for (auto& v : row) v = static_cast<long>(rng.below(7)) - 3;
  }
  // Plant dependencies so ranks vary.
  if (rows > 2 && rng.below(2) == 0) {
    for (std::size_t c = 0; c < cols; ++c) m[rows - 1][c] = 2 * m[0][c] - m[1][c];
  }
  return m;
}

void expect_rref_shape(const RrefReport& rep) {
  const ExactMatrix& a = rep.reduced;
  for (std::size_t i = 0; i < rep.rank; ++i) {
    const std::size_t p = rep.pivot_cols[i];
    if (i > 0) ASSERT_GT(p, rep.pivot_cols[i - 1]);
    ASSERT_EQ(a.at(i, p), 1);
    for (std::size_t c = 0; c < p; ++c) ASSERT_EQ(sgn(a.at(i, c)), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != i) ASSERT_EQ(sgn(a.at(r, p)), 0);
    }
  }
  for (std::size_t r = rep.rank; r < a.rows(); ++r) ASSERT_TRUE(a.row_is_zero(r));
}

TEST(RationalTest, Formatting) {
  EXPECT_EQ(format_rational(Rational(6, 8)), "3/4");
  EXPECT_EQ(format_rational(Rational(-4, 2)), "-2");
  EXPECT_EQ(format_rational(Rational(0)), "0");
  EXPECT_EQ(format_rational(Rational(-1, 3)), "-1/3");
}

TEST(RrefTest, LatinOrderFourDisplayOrder) {
  // Row 1 moved to the bottom: columns, rows 2..4, then row 1.
  auto system = build_system(fixtures::latin4());
  const auto& b = system.matrix;
  ExactMatrix shown(0, b.coeff_cols());
  for (std::size_t r : {0, 1, 2, 3, 5, 6, 7, 4}) shown.append_row(b.row(r), b.rhs(r));

  const RrefReport rep = rref(shown);
  EXPECT_EQ(rep.rank, 7u);
  EXPECT_TRUE(rep.consistent);
  EXPECT_TRUE(rep.reduced.row_is_zero(7));
  EXPECT_EQ(rep.reduced.rhs(7), 0);
  expect_rref_shape(rep);
}

TEST(RrefTest, AlreadyReducedIsUnchanged) {
  const ExactMatrix m = fixtures::matrix_from_rows({{1, 0, 2, 0, 5}, {0, 1, -1, 0, 3}, {0, 0, 0, 1, 7}});
  const RrefReport rep = rref(m);
  EXPECT_EQ(rep.rank, 3u);
  EXPECT_EQ(rep.reduced, m);
  EXPECT_EQ(rep.pivot_cols, (std::vector<std::size_t>{0, 1, 3}));
}

TEST(RrefTest, SudokuOrderFourMatchesReference) {
  const RrefReport rep = rref(build_system(fixtures::sudoku4()).matrix);
  EXPECT_EQ(rep.rank, 8u);
  EXPECT_TRUE(rep.consistent);
  EXPECT_EQ(rep.reduced, fixtures::matrix_from_rows(fixtures::kSudoku4Reduced));
  EXPECT_EQ(rep.pivot_cols, (std::vector<std::size_t>{0, 1, 2, 3, 4, 8, 10, 12}));
}

TEST(RrefTest, DetectsInconsistency) {
  const ExactMatrix m = fixtures::matrix_from_rows({{1, 1, 2}, {1, 1, 3}});
  const RrefReport rep = rref(m);
  EXPECT_EQ(rep.rank, 1u);
  EXPECT_FALSE(rep.consistent);
  EXPECT_THROW(back_substitute(rep), std::logic_error);
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(build_system(PuzzleSpec::sudoku(9, 3, 3)).matrix), 21u);
  EXPECT_EQ(rank(build_system(PuzzleSpec::sudoku(6, 2, 3)).matrix), 13u);
  EXPECT_EQ(rank(ExactMatrix(3, 4)), 0u);
  EXPECT_EQ(rank(ExactMatrix(0, 0)), 0u);
}

TEST(RankTest, IgnoresRightHandSide) {
  // Zero coefficients with nonzero c: rank 0, inconsistent.
  const ExactMatrix m = fixtures::matrix_from_rows({{0, 0, 4}});
  const RrefReport rep = rref(m);
  EXPECT_EQ(rep.rank, 0u);
  EXPECT_FALSE(rep.consistent);
}

TEST(BackSubstituteTest, SingleEquation) {
  const auto solved = back_substitute(rref(fixtures::matrix_from_rows({{1, 5}})));
  const auto& x = std::get<std::vector<Rational>>(solved);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x[0], 5);
}

TEST(BackSubstituteTest, FractionalSolution) {
  // 2x + y = 1, x - y = 1  ->  x = 2/3, y = -1/3
  const auto solved = back_substitute(rref(fixtures::matrix_from_rows({{2, 1, 1}, {1, -1, 1}})));
  const auto& x = std::get<std::vector<Rational>>(solved);
  EXPECT_EQ(x[0], Rational(2, 3));
  EXPECT_EQ(x[1], Rational(-1, 3));
}

TEST(BackSubstituteTest, UnitSystemWithoutCluesIsUnderdetermined) {
  for (int n = 2; n <= 6; ++n) {
    const RrefReport rep = rref(build_system(PuzzleSpec::latin(n)).matrix);
    const auto solved = back_substitute(rep);
    const auto* under = std::get_if<Underdetermined>(&solved);
    ASSERT_NE(under, nullptr);
    EXPECT_EQ(under->free_cols.size(), static_cast<std::size_t>(n * n) - rep.rank);
  }
}

TEST(BackSubstituteTest, WorksFromEchelonFormToo) {
  // Upper triangular but not reduced: x + y + z = 6, y + z = 5, z = 3.
  RrefReport rep;
  rep.reduced = fixtures::matrix_from_rows({{1, 1, 1, 6}, {0, 1, 1, 5}, {0, 0, 1, 3}});
  rep.rank = 3;
  rep.pivot_cols = {0, 1, 2};
  const auto& x = std::get<std::vector<Rational>>(back_substitute(rep));
  EXPECT_EQ(x, (std::vector<Rational>{1, 2, 3}));
}

TEST(ResidualTest, WorkedSolutionSatisfiesLatinSystem) {
  const auto system = build_system(fixtures::latin4());
  for (const auto& r : residual(system.matrix, fixtures::to_rationals(fixtures::kSolutionVector))) {
    EXPECT_EQ(sgn(r), 0);
  }
}

TEST(ResidualTest, ZeroVectorGivesNegatedRhs) {
  const auto system = build_system(PuzzleSpec::sudoku(6, 3, 2));
  const std::vector<Rational> zero(36);
  for (const auto& r : residual(system.matrix, zero)) EXPECT_EQ(r, -21);
}

TEST(ResidualTest, DimensionMismatchThrows) {
  const auto system = build_system(fixtures::latin4());
  const std::vector<Rational> x(15);
  EXPECT_THROW(residual(system.matrix, x), std::domain_error);
}

TEST(ResidualTest, RandomValidGridsAreSolutions) {
  for (const auto& spec : fixtures::specs_up_to(2, 9)) {
    const auto system = build_system(spec);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Grid g = generate_complete(spec, seed);
      ASSERT_TRUE(validate_complete(g).valid());
      const std::vector<Rational> x(g.values().begin(), g.values().end());
      for (const auto& r : residual(system.matrix, x)) ASSERT_EQ(sgn(r), 0);
    }
  }
}

TEST(DumpTest, Format) {
  ExactMatrix m(0, 3);
  const std::vector<Rational> row = {Rational(1), Rational(-1, 2), Rational(0)};
  m.append_row(row, Rational(7, 3));
  EXPECT_EQ(dump_matrix(m), "1 -1/2 0 | 7/3\n");
}

TEST(RrefPropertyTest, IdempotentAndWellShaped) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = 1 + rng.below(7);
    const auto cols = 1 + rng.below(7);
    ExactMatrix m = from_longs(random_matrix(rng, rows, cols));
    for (std::size_t r = 0; r < m.rows(); ++r) m.rhs(r) = static_cast<long>(rng.below(11)) - 5;
    const RrefReport once = rref(m);
    expect_rref_shape(once);
    const RrefReport twice = rref(once.reduced);
    ASSERT_EQ(twice.reduced, once.reduced);
    ASSERT_EQ(twice.pivot_cols, once.pivot_cols);
  }
}

TEST(RrefPropertyTest, RankMatchesIndependentElimination) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = 1 + rng.below(8);
    const auto cols = 1 + rng.below(8);
    const auto data = random_matrix(rng, rows, cols);
    ASSERT_EQ(rank(from_longs(data)), bareiss_rank(data)) << "trial " << trial;
  }
  for (const auto& spec : fixtures::specs_up_to(2, 8)) {
    const auto system = build_system(spec);
    std::vector<std::vector<long>> data;
    for (std::size_t r = 0; r < system.matrix.rows(); ++r) {
      std::vector<long> row;
      for (const auto& v : system.matrix.row(r)) row.push_back(v.get_num().get_si());
      data.push_back(std::move(row));
    }
    ASSERT_EQ(rank(system.matrix), bareiss_rank(data)) << spec.describe();
  }
}

TEST(RrefPropertyTest, RankInvariantUnderRowShuffle) {
  SplitMix64 rng(11);
  for (const auto& spec : fixtures::specs_up_to(2, 9)) {
    const auto system = build_system(spec);
    const std::size_t expected = rank(system.matrix);
    for (int round = 0; round < 3; ++round) {
      std::vector<std::size_t> order(system.matrix.rows());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.shuffle(order);
      ExactMatrix shuffled(0, system.matrix.coeff_cols());
      for (auto r : order) shuffled.append_row(system.matrix.row(r), system.matrix.rhs(r));
      ASSERT_EQ(rank(shuffled), expected) << spec.describe();
    }
  }
}

TEST(RrefPropertyTest, RowOperationsPreserveSolutions) {
  SplitMix64 rng(5);
  for (const auto& spec : fixtures::specs_up_to(2, 6)) {
    const auto system = build_system(spec);
    const RrefReport rep = rref(system.matrix);
    ASSERT_TRUE(rep.consistent);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      // A solution stays a solution.
      const Grid g = generate_complete(spec, seed);
      const std::vector<Rational> x(g.values().begin(), g.values().end());
      for (const auto& r : residual(rep.reduced, x)) ASSERT_EQ(sgn(r), 0);

      // A non-solution stays a non-solution.
      std::vector<Rational> y = x;
      y[rng.below(y.size())] += 1;
      auto nonzero = [](const std::vector<Rational>& v) {
        return std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
      };
      ASSERT_TRUE(nonzero(residual(system.matrix, y)));
      ASSERT_TRUE(nonzero(residual(rep.reduced, y)));
    }
  }
}

}  // namespace
}  // namespace unitsum
