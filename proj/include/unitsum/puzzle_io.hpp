#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "unitsum/grid.hpp"

namespace unitsum {

/// Malformed puzzle text; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Puzzle file format:
//
//   latin <n>            |  sudoku <n> <l> <m>
//   <n lines of n whitespace-separated tokens>
//
// A token is `.` for an unknown cell or a decimal value in 1..n. `0` is also
// read as unknown. Blank lines are ignored.
Puzzle parse_puzzle(std::istream& in);
Puzzle parse_puzzle_string(const std::string& text);

/// Header plus body; unknowns written as `.`, tokens separated by one space.
std::string format_puzzle(const Puzzle& puzzle);
std::string format_grid(const Grid& grid);

}  // namespace unitsum
