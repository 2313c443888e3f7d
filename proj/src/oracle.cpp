#include "unitsum/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace unitsum {

namespace {

// Row, column and block membership are computed directly from coordinates so
// the oracle shares no code path with the linear system.
class Backtracker {
 public:
  Backtracker(const Puzzle& puzzle, std::uint64_t cap, std::size_t retention)
      : puzzle_(puzzle), n_(puzzle.order()), cap_(cap), retention_(retention) {
    if (n_ > 63) throw std::domain_error("oracle supports orders up to 63");
    const auto n = static_cast<std::size_t>(n_);
    row_used_.assign(n, 0);
    col_used_.assign(n, 0);
    block_used_.assign(n, 0);
    values_.assign(n * n, 0);
    if (puzzle.spec().is_sudoku()) {
      l_ = puzzle.spec().block_rows();
      m_ = puzzle.spec().block_cols();
    }
  }

  OracleResult run() {
    for (int k = 0; k < n_ * n_; ++k) {
      const auto& clue = puzzle_.values()[static_cast<std::size_t>(k)];
      if (!clue) {
        blanks_.push_back(k);
        continue;
      }
      if (!place(k, *clue)) return result_;
    }
    search(0);
    return result_;
  }

 private:
  int block(int r, int c) const { return l_ == 0 ? -1 : (r / l_) * l_ + c / m_; }

  bool allowed(int k, int v) const {
    const int r = k / n_;
    const int c = k % n_;
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((row_used_[static_cast<std::size_t>(r)] | col_used_[static_cast<std::size_t>(c)]) & bit) return false;
    const int b = block(r, c);
    return b < 0 || !(block_used_[static_cast<std::size_t>(b)] & bit);
  }

  bool place(int k, int v) {
    if (!allowed(k, v)) return false;
    toggle(k, v);
    values_[static_cast<std::size_t>(k)] = v;
    return true;
  }

  void toggle(int k, int v) {
    const int r = k / n_;
    const int c = k % n_;
    const std::uint64_t bit = std::uint64_t{1} << v;
    row_used_[static_cast<std::size_t>(r)] ^= bit;
    col_used_[static_cast<std::size_t>(c)] ^= bit;
    const int b = block(r, c);
    if (b >= 0) block_used_[static_cast<std::size_t>(b)] ^= bit;
  }

  // Returns false once the cap is reached.
  bool search(std::size_t depth) {
    if (depth == blanks_.size()) {
      ++result_.count;
      if (result_.solutions.size() < retention_) result_.solutions.emplace_back(puzzle_.spec(), values_);
      if (result_.count >= cap_) {
        result_.capped = true;
        return false;
      }
      return true;
    }
    const int k = blanks_[depth];
    for (int v = 1; v <= n_; ++v) {
      if (!allowed(k, v)) continue;
      toggle(k, v);
      values_[static_cast<std::size_t>(k)] = v;
      const bool go_on = search(depth + 1);
      toggle(k, v);
      if (!go_on) return false;
    }
    return true;
  }

  const Puzzle& puzzle_;
  int n_;
  int l_ = 0;
  int m_ = 0;
  std::uint64_t cap_;
  std::size_t retention_;
  std::vector<std::uint64_t> row_used_;
  std::vector<std::uint64_t> col_used_;
  std::vector<std::uint64_t> block_used_;
  std::vector<int> values_;
  std::vector<int> blanks_;
  OracleResult result_;
};

}  // namespace

OracleResult count_completions(const Puzzle& puzzle, std::uint64_t cap, std::size_t retention) {
  if (cap == 0) throw std::domain_error("cap must be positive");
  return Backtracker(puzzle, cap, retention).run();
}

Agreement compare_with_oracle(SolveOutcome linear, OracleResult oracle) {
  Agreement a{std::move(linear), std::move(oracle), false, {}};
  switch (a.linear.cls) {
    case SolveClass::UniqueValid:
      if (a.oracle.count == 1 && a.oracle.capped) {
        a.note = "cap too small to confirm a unique completion";
        break;
      }
      a.agrees = a.oracle.count == 1 && !a.oracle.solutions.empty() &&
                 a.oracle.solutions.front() == *a.linear.solution;
      a.note = a.agrees ? "unique completion matches the linear solution"
                        : "linear solution is not the unique completion";
      break;
    case SolveClass::Inconsistent:
      a.agrees = a.oracle.count == 0;
      a.note = a.agrees ? "no completion exists" : "oracle found a completion of an inconsistent system";
      break;
    case SolveClass::Underdetermined:
      a.agrees = true;
      a.note = "linear system has free variables; oracle count is informational";
      break;
    case SolveClass::UniqueInvalid:
      // Every completion solves the linear system, whose only solution is invalid.
      a.agrees = a.oracle.count == 0;
      a.note = a.agrees ? "no completion exists" : "oracle found a completion the linear solution rules out";
      break;
  }
  return a;
}

Agreement agrees_with_linear(const Puzzle& puzzle, std::uint64_t cap) {
  return compare_with_oracle(linear_solve(puzzle), count_completions(puzzle, std::max<std::uint64_t>(cap, 2)));
}

}  // namespace unitsum
