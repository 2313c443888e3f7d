#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace unitsum {

/// Exact rational. Arithmetic keeps it in lowest terms; the two-argument
/// constructor does not, so call canonicalize() after building one by hand.
using Rational = mpq_class;

/// `p/q` in lowest terms, or the bare integer when q == 1.
std::string format_rational(const Rational& value);

/// Dense augmented matrix (B | c) over the rationals.
///
/// Columns 0..coeff_cols()-1 form the coefficient block B; the right-hand
/// side c is stored separately and never takes part in pivoting. Each
/// coefficient column carries the flat cell index it stands for.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Labels default to 1..coeff_cols.
  ExactMatrix(std::size_t rows, std::size_t coeff_cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t coeff_cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return coeffs_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return coeffs_[r * cols_ + c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  std::span<Rational> row(std::size_t r) { return {coeffs_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {coeffs_.data() + r * cols_, cols_}; }

  const std::vector<int>& col_labels() const noexcept { return labels_; }
  void set_col_labels(std::vector<int> labels);

  /// Throws std::domain_error when coeffs.size() != coeff_cols().
  void append_row(std::span<const Rational> coeffs, const Rational& rhs);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> coeffs_;
  std::vector<Rational> rhs_;
  std::vector<int> labels_;
};

struct RrefReport {
  std::size_t rank = 0;
  /// Coefficient column positions holding a leading 1, strictly increasing.
  std::vector<std::size_t> pivot_cols;
  /// False iff some reduced row is zero in B with a nonzero right-hand side.
  bool consistent = true;
  ExactMatrix reduced;
};

/// Gauss-Jordan elimination over B with the right-hand side carried along.
/// Pivot choice is deterministic: leftmost unresolved column, topmost
/// nonzero row at or below the current pivot row, swapped up.
RrefReport rref(const ExactMatrix& mat);

/// Rank of the coefficient block B.
std::size_t rank(const ExactMatrix& mat);

struct Underdetermined {
  std::vector<std::size_t> free_cols;
};

using BackSubstitution = std::variant<std::vector<Rational>, Underdetermined>;

/// Solves a consistent reduced system from the last pivot upward. Returns the
/// full solution vector when every coefficient column is a pivot, otherwise
/// the free columns. Throws std::logic_error on an inconsistent report.
BackSubstitution back_substitute(const RrefReport& report);

/// B x - c. Throws std::domain_error when x.size() != coeff_cols().
std::vector<Rational> residual(const ExactMatrix& mat, std::span<const Rational> x);

/// One row per line, entries separated by single spaces, right-hand side
/// after ` | `.
std::string dump_matrix(const ExactMatrix& mat);

}  // namespace unitsum
