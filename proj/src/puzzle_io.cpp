#include "unitsum/puzzle_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace unitsum {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int> to_int(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

int header_int(const Token& tok, int line, const char* what) {
  auto v = to_int(tok.text);
  if (!v || *v < 1) {
    throw ParseError(line, tok.column, std::string("expected positive integer for ") + what + ", got '" +
                                          tok.text + "'");
  }
  return *v;
}

PuzzleSpec parse_header(const std::vector<Token>& toks, int line) {
  const std::string& kind = toks.front().text;
  if (kind == "latin") {
    if (toks.size() != 2) throw ParseError(line, toks.front().column, "header must be 'latin <n>'");
    return PuzzleSpec::latin(header_int(toks[1], line, "n"));
  }
  if (kind == "sudoku") {
    if (toks.size() != 4) throw ParseError(line, toks.front().column, "header must be 'sudoku <n> <l> <m>'");
    const int n = header_int(toks[1], line, "n");
    const int l = header_int(toks[2], line, "l");
    const int m = header_int(toks[3], line, "m");
    if (l * m != n) {
      throw ParseError(line, toks[2].column,
                       "block " + std::to_string(l) + "x" + std::to_string(m) + " does not tile order " +
                           std::to_string(n));
    }
    return PuzzleSpec::sudoku(n, l, m);
  }
  throw ParseError(line, toks.front().column, "unknown puzzle kind '" + kind + "'");
}

}  // namespace

Puzzle parse_puzzle(std::istream& in) {
  std::optional<PuzzleSpec> spec;
  std::vector<std::optional<int>> cells;
  int rows_read = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!spec) {
      spec = parse_header(toks, line_no);
      continue;
    }
    const int n = spec->order();
    if (rows_read == n) throw ParseError(line_no, toks.front().column, "more than " + std::to_string(n) + " rows");
    if (static_cast<int>(toks.size()) != n) {
      const int col = static_cast<int>(toks.size()) > n ? toks[static_cast<std::size_t>(n)].column
                                                        : static_cast<int>(line.size()) + 1;
      throw ParseError(line_no, col,
                       "expected " + std::to_string(n) + " tokens, found " + std::to_string(toks.size()));
    }
    for (const auto& tok : toks) {
      if (tok.text == ".") {
        cells.emplace_back();
        continue;
      }
      auto v = to_int(tok.text);
      if (!v || *v < 0 || *v > n) {
        throw ParseError(line_no, tok.column,
                         "token '" + tok.text + "' is neither '.' nor a value in 1.." + std::to_string(n));
      }
      cells.push_back(*v == 0 ? std::nullopt : std::optional<int>(*v));
    }
    ++rows_read;
  }
  if (!spec) throw ParseError(line_no + 1, 1, "missing header");
  if (rows_read != spec->order()) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(spec->order()) + " rows, found " + std::to_string(rows_read));
  }
  return Puzzle(*spec, std::move(cells));
}

Puzzle parse_puzzle_string(const std::string& text) {
  std::istringstream in(text);
  return parse_puzzle(in);
}

std::string format_puzzle(const Puzzle& puzzle) {
  const int n = puzzle.order();
  std::string out = puzzle.spec().describe() + "\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      const auto v = puzzle.at(i, j);
      out += v ? std::to_string(*v) : ".";
    }
    out += '\n';
  }
  return out;
}

std::string format_grid(const Grid& grid) { return format_puzzle(Puzzle::from_grid(grid)); }

}  // namespace unitsum
