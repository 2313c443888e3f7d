#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "unitsum/engine.hpp"
#include "unitsum/grid.hpp"
#include "unitsum/linalg.hpp"
#include "unitsum/oracle.hpp"
#include "unitsum/puzzle_io.hpp"
#include "unitsum/system.hpp"

namespace py = pybind11;
using namespace unitsum;

namespace {

using Rows = std::vector<std::vector<std::optional<int>>>;

// fractions.Fraction, or a plain int when the denominator is 1.
py::object to_python(const Rational& q) {
  if (q.get_den() == 1) return py::int_(py::str(q.get_num().get_str()));
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(format_rational(q));
}

Rational from_python(const py::handle& h) {
  Rational q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

// None and 0 both mean blank.
Puzzle to_puzzle(const PuzzleSpec& spec, const Rows& rows) {
  const int n = spec.order();
  if (static_cast<int>(rows.size()) != n) throw py::value_error("expected " + std::to_string(n) + " rows");
  std::vector<std::optional<int>> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw py::value_error("expected " + std::to_string(n) + " columns");
    for (const auto& v : row) cells.push_back(v && *v != 0 ? v : std::nullopt);
  }
  return Puzzle(spec, std::move(cells));
}

Grid to_grid(const PuzzleSpec& spec, const Rows& rows) {
  auto grid = to_puzzle(spec, rows).to_grid();
  if (!grid) throw py::value_error("grid has blank cells");
  return *grid;
}

Rows puzzle_rows(const Puzzle& p) {
  const int n = p.order();
  Rows rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(p.at(i, j));
  }
  return rows;
}

py::tuple cell_tuple(const CellIndex& c) { return py::make_tuple(c.row, c.col); }

py::list rational_rows(int n, const std::vector<Rational>& x) {
  py::list rows;
  for (int i = 0; i < n; ++i) {
    py::list row;
    for (int j = 0; j < n; ++j) row.append(to_python(x[static_cast<std::size_t>(i * n + j)]));
    rows.append(row);
  }
  return rows;
}

py::dict violation_dict(const Violation& v) {
  py::dict d;
  switch (v.kind) {
    case Violation::Kind::NonIntegral:
      d["kind"] = "non_integral";
      break;
    case Violation::Kind::OutOfRange:
      d["kind"] = "out_of_range";
      break;
    case Violation::Kind::DuplicateInUnit:
      d["kind"] = "duplicate";
      break;
  }
  if (v.cell) d["cell"] = cell_tuple(*v.cell);
  if (v.unit) d["unit"] = v.unit->name();
  d["value"] = to_python(v.value);
  d["message"] = v.describe();
  return d;
}

py::dict solve(const PuzzleSpec& spec, const Rows& rows) {
  const SolveOutcome out = linear_solve(to_puzzle(spec, rows));
  py::dict d;
  d["class"] = to_string(out.cls);
  d["rank"] = out.rank;
  d["unknowns"] = out.unknowns;
  if (out.solution) d["solution"] = out.solution->rows();
  if (out.cls == SolveClass::UniqueInvalid) {
    d["assignment"] = rational_rows(spec.order(), out.assignment);
    py::list vs;
    for (const auto& v : out.violations) vs.append(violation_dict(v));
    d["violations"] = vs;
  }
  if (out.cls == SolveClass::Underdetermined) {
    py::list cells;
    for (const auto& c : out.free_cells) cells.append(cell_tuple(c));
    d["free_cells"] = cells;
  }
  return d;
}

py::dict rref_of(const std::vector<std::vector<py::object>>& coeffs, const std::vector<py::object>& rhs) {
  if (coeffs.size() != rhs.size()) throw py::value_error("rhs length must equal the number of rows");
  const std::size_t cols = coeffs.empty() ? 0 : coeffs.front().size();
  ExactMatrix m(0, cols);
  std::vector<Rational> row(cols);
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    if (coeffs[r].size() != cols) throw py::value_error("ragged coefficient rows");
    for (std::size_t c = 0; c < cols; ++c) row[c] = from_python(coeffs[r][c]);
    m.append_row(row, from_python(rhs[r]));
  }
  const RrefReport rep = rref(m);
  py::list reduced;
  py::list reduced_rhs;
  for (std::size_t r = 0; r < rep.reduced.rows(); ++r) {
    py::list out;
    for (const auto& v : rep.reduced.row(r)) out.append(to_python(v));
    reduced.append(out);
    reduced_rhs.append(to_python(rep.reduced.rhs(r)));
  }
  py::dict d;
  d["rank"] = rep.rank;
  d["pivot_cols"] = rep.pivot_cols;
  d["consistent"] = rep.consistent;
  d["reduced"] = reduced;
  d["rhs"] = reduced_rhs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unit-sum linear systems for Latin squares and Sudokus";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PuzzleSpec>(m, "Spec")
      .def_static("latin", &PuzzleSpec::latin, py::arg("n"))
      .def_static("sudoku", &PuzzleSpec::sudoku, py::arg("n"), py::arg("l"), py::arg("m"))
      .def_property_readonly("order", &PuzzleSpec::order)
      .def_property_readonly("kind", [](const PuzzleSpec& s) { return s.is_sudoku() ? "sudoku" : "latin"; })
      .def_property_readonly("block_rows",
                             [](const PuzzleSpec& s) { return s.is_sudoku() ? std::optional(s.block_rows()) : std::nullopt; })
      .def_property_readonly("block_cols",
                             [](const PuzzleSpec& s) { return s.is_sudoku() ? std::optional(s.block_cols()) : std::nullopt; })
      .def("describe", &PuzzleSpec::describe)
      .def("__eq__", [](const PuzzleSpec& a, const PuzzleSpec& b) { return a == b; })
      .def("__hash__", [](const PuzzleSpec& s) { return py::hash(py::str(s.describe())); })
      .def("__repr__", [](const PuzzleSpec& s) { return "Spec(" + s.describe() + ")"; });

  m.def("unit_sum", &unit_sum, py::arg("n"));
  m.def("expected_rank", &expected_rank, py::arg("spec"));
  m.def(
      "system_rank", [](const PuzzleSpec& s) { return rank(build_system(s).matrix); }, py::arg("spec"),
      "Rank of the unit-sum coefficient matrix, computed exactly.");
  m.def(
      "build_system",
      [](const PuzzleSpec& s) {
        const auto sys = build_system(s);
        std::vector<std::vector<int>> rows;
        std::vector<long> rhs;
        std::vector<std::string> labels;
        for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
          std::vector<int> row;
          for (const auto& v : sys.matrix.row(r)) row.push_back(static_cast<int>(v.get_num().get_si()));
          rows.push_back(std::move(row));
          rhs.push_back(sys.matrix.rhs(r).get_num().get_si());
          labels.push_back(sys.row_labels[r].name());
        }
        return py::make_tuple(rows, rhs, labels);
      },
      py::arg("spec"), "(coefficient rows, right-hand sides, unit names).");
  m.def(
      "pivot_pattern",
      [](const PuzzleSpec& s) {
        py::list out;
        for (const auto& c : pivot_unknown_pattern(s)) out.append(cell_tuple(c));
        return out;
      },
      py::arg("spec"));
  m.def("rref", &rref_of, py::arg("coeffs"), py::arg("rhs"),
        "Exact reduced row echelon form; entries may be ints, Fractions or 'p/q' strings.");

  m.def("solve", &solve, py::arg("spec"), py::arg("rows"));
  m.def(
      "generate", [](const PuzzleSpec& s, std::uint64_t seed) { return generate_complete(s, seed).rows(); },
      py::arg("spec"), py::arg("seed") = 0);
  m.def(
      "max_linear_puzzle",
      [](const PuzzleSpec& s, const Rows& rows) { return puzzle_rows(derive_max_linear_puzzle(to_grid(s, rows))); },
      py::arg("spec"), py::arg("grid"));
  m.def(
      "violated_units",
      [](const PuzzleSpec& s, const Rows& rows) {
        std::vector<std::string> names;
        for (const auto& u : validate_complete(to_grid(s, rows)).violated) names.push_back(u.name());
        return names;
      },
      py::arg("spec"), py::arg("grid"));
  m.def(
      "count_completions",
      [](const PuzzleSpec& s, const Rows& rows, std::uint64_t cap) {
        const auto r = count_completions(to_puzzle(s, rows), cap);
        py::dict d;
        d["count"] = r.count;
        d["capped"] = r.capped;
        std::vector<std::vector<std::vector<int>>> sols;
        for (const auto& g : r.solutions) sols.push_back(g.rows());
        d["solutions"] = sols;
        return d;
      },
      py::arg("spec"), py::arg("rows"), py::arg("cap") = 1000);

  m.def(
      "parse_puzzle",
      [](const std::string& text) {
        const Puzzle p = parse_puzzle_string(text);
        return py::make_tuple(p.spec(), puzzle_rows(p));
      },
      py::arg("text"));
  m.def(
      "format_puzzle", [](const PuzzleSpec& s, const Rows& rows) { return format_puzzle(to_puzzle(s, rows)); },
      py::arg("spec"), py::arg("rows"));
}
