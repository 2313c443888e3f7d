#include "unitsum/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace unitsum {

std::string format_rational(const Rational& raw) {
  // mpq_class(p, q) skips canonicalisation; arithmetic results never do.
  Rational value = raw;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t coeff_cols)
    : rows_(rows), cols_(coeff_cols), coeffs_(rows * coeff_cols), rhs_(rows), labels_(coeff_cols) {
  std::iota(labels_.begin(), labels_.end(), 1);
}

void ExactMatrix::set_col_labels(std::vector<int> labels) {
  if (labels.size() != cols_) throw std::domain_error("one label per coefficient column required");
  labels_ = std::move(labels);
}

void ExactMatrix::append_row(std::span<const Rational> coeffs, const Rational& rhs) {
  if (coeffs.size() != cols_) {
    throw std::domain_error("row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                            std::to_string(cols_));
  }
  coeffs_.insert(coeffs_.end(), coeffs.begin(), coeffs.end());
  rhs_.push_back(rhs);
  ++rows_;
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  std::swap(rhs_[a], rhs_[b]);
}

bool ExactMatrix::row_is_zero(std::size_t r) const {
  for (const auto& v : row(r)) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

RrefReport rref(const ExactMatrix& mat) {
  RrefReport report;
  report.reduced = mat;
  ExactMatrix& a = report.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.coeff_cols();

  std::size_t pivot_row = 0;
  Rational factor;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && sgn(a.at(found, col)) == 0) ++found;
    if (found == rows) continue;
    a.swap_rows(pivot_row, found);

    const Rational inv = 1 / a.at(pivot_row, col);
    if (inv != 1) {
      for (std::size_t c = col; c < cols; ++c) a.at(pivot_row, c) *= inv;
      a.rhs(pivot_row) *= inv;
    }

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || sgn(a.at(r, col)) == 0) continue;
      factor = a.at(r, col);
      // Entries left of col are zero in the pivot row.
      for (std::size_t c = col; c < cols; ++c) {
        if (sgn(a.at(pivot_row, c)) != 0) a.at(r, c) -= factor * a.at(pivot_row, c);
      }
      a.rhs(r) -= factor * a.rhs(pivot_row);
    }

    report.pivot_cols.push_back(col);
    ++pivot_row;
  }

  report.rank = report.pivot_cols.size();
  for (std::size_t r = report.rank; r < rows; ++r) {
    if (sgn(a.rhs(r)) != 0) {
      report.consistent = false;
      break;
    }
  }
  return report;
}

std::size_t rank(const ExactMatrix& mat) { return rref(mat).rank; }

BackSubstitution back_substitute(const RrefReport& report) {
  if (!report.consistent) {
    throw std::logic_error("back substitution on an inconsistent system");
  }
  const ExactMatrix& a = report.reduced;
  const std::size_t cols = a.coeff_cols();

  if (report.rank < cols) {
    Underdetermined under;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : report.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_pivot[c]) under.free_cols.push_back(c);
    }
    return under;
  }

  std::vector<Rational> x(cols);
  for (std::size_t i = report.rank; i-- > 0;) {
    const std::size_t p = report.pivot_cols[i];
    Rational value = a.rhs(i);
    for (std::size_t c = p + 1; c < cols; ++c) {
      if (sgn(a.at(i, c)) != 0) value -= a.at(i, c) * x[c];
    }
    x[p] = value / a.at(i, p);
  }
  return x;
}

std::vector<Rational> residual(const ExactMatrix& mat, std::span<const Rational> x) {
  if (x.size() != mat.coeff_cols()) {
    throw std::domain_error("vector length " + std::to_string(x.size()) + " does not match " +
                            std::to_string(mat.coeff_cols()) + " columns");
  }
  std::vector<Rational> out(mat.rows());
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < mat.coeff_cols(); ++c) {
      if (sgn(mat.at(r, c)) != 0) sum += mat.at(r, c) * x[c];
    }
    out[r] = sum - mat.rhs(r);
  }
  return out;
}

std::string dump_matrix(const ExactMatrix& mat) {
  std::string out;
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.coeff_cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_rational(mat.at(r, c));
    }
    out += " | ";
    out += format_rational(mat.rhs(r));
    out += '\n';
  }
  return out;
}

}  // namespace unitsum
