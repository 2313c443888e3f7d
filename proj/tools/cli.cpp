#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "unitsum/engine.hpp"
#include "unitsum/grid.hpp"
#include "unitsum/linalg.hpp"
#include "unitsum/oracle.hpp"
#include "unitsum/puzzle_io.hpp"
#include "unitsum/system.hpp"

namespace unitsum::cli {

namespace {

using json = nlohmann::ordered_json;

struct SpecFlags {
  std::string kind;
  int n = 0;
  std::optional<int> l;
  std::optional<int> m;

  void attach(CLI::App& cmd, bool required) {
    auto* k = cmd.add_option("--kind", kind, "latin or sudoku")->check(CLI::IsMember({"latin", "sudoku"}));
    auto* o = cmd.add_option("--n", n, "order");
    if (required) {
      k->required();
      o->required();
    }
    cmd.add_option("--l", l, "block rows (sudoku)");
    cmd.add_option("--m", m, "block columns (sudoku)");
  }

  PuzzleSpec resolve() const {
    if (kind == "latin") return PuzzleSpec::latin(n);
    if (!l || !m) throw std::domain_error("sudoku needs --l and --m");
    return PuzzleSpec::sudoku(n, *l, *m);
  }
};

Puzzle load(const std::string& path) {
  if (path == "-") return parse_puzzle(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_puzzle(in);
}

std::string cell_text(CellIndex c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

int rank_single(const PuzzleSpec& spec, const std::string& dump_path, std::ostream& out, std::ostream& err) {
  const RrefReport report = rref(build_system(spec).matrix);
  const int formula = expected_rank(spec);
  const bool match = static_cast<int>(report.rank) == formula;
  out << "rank=" << report.rank << " formula=" << formula << " match=" << (match ? "yes" : "no") << "\n";
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) {
      err << "error: cannot write '" << dump_path << "'\n";
      return kUsage;
    }
    f << dump_matrix(report.reduced);
  }
  return match ? kOk : 1;
}

int rank_table(const std::string& kind, int max_n, std::ostream& out) {
  bool all_match = true;
  auto row = [&](const PuzzleSpec& spec) {
    const auto rk = static_cast<int>(rank(build_system(spec).matrix));
    const int formula = expected_rank(spec);
    all_match = all_match && rk == formula;
    out << spec.order() << " ";
    if (spec.is_sudoku()) out << spec.block_rows() << " " << spec.block_cols() << " ";
    out << rk << " " << formula << " " << (rk == formula ? "yes" : "no") << "\n";
  };
  if (kind == "latin") {
    out << "n rk formula match\n";
    for (int n = 1; n <= max_n; ++n) row(PuzzleSpec::latin(n));
  } else {
    out << "n l m rk formula match\n";
    for (int n = 4; n <= max_n; ++n) {
      for (int l = 2; l <= n / 2; ++l) {
        if (n % l == 0 && n / l >= 2) row(PuzzleSpec::sudoku(n, l, n / l));
      }
    }
  }
  return all_match ? kOk : 1;
}

json rows_json(const Grid& g) { return json(g.rows()); }

json rational_rows_json(int n, const std::vector<Rational>& x) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(format_rational(x[static_cast<std::size_t>(i * n + j)]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json violation_json(const Violation& v) {
  json j;
  switch (v.kind) {
    case Violation::Kind::NonIntegral:
      j["kind"] = "non_integral";
      break;
    case Violation::Kind::OutOfRange:
      j["kind"] = "out_of_range";
      break;
    case Violation::Kind::DuplicateInUnit:
      j["kind"] = "duplicate";
      break;
  }
  if (v.cell) j["cell"] = {v.cell->row, v.cell->col};
  if (v.unit) {
    j["unit"] = to_string(v.unit->kind);
    j["index"] = v.unit->index;
  }
  j["value"] = format_rational(v.value);
  return j;
}

int exit_code(SolveClass cls) {
  switch (cls) {
    case SolveClass::UniqueValid:
      return kOk;
    case SolveClass::Underdetermined:
      return kUnderdetermined;
    case SolveClass::Inconsistent:
      return kInconsistent;
    case SolveClass::UniqueInvalid:
      return kInvalid;
  }
  return kUsage;
}

int cmd_solve(const Puzzle& puzzle, bool as_json, std::ostream& out) {
  const SolveOutcome r = linear_solve(puzzle);
  const int n = puzzle.order();
  if (as_json) {
    json j;
    j["class"] = to_string(r.cls);
    j["rank"] = r.rank;
    j["unknowns"] = r.unknowns;
    if (r.cls == SolveClass::UniqueValid) j["solution"] = rows_json(*r.solution);
    if (r.cls == SolveClass::UniqueInvalid) {
      j["solution"] = rational_rows_json(n, r.assignment);
      j["violations"] = json::array();
      for (const auto& v : r.violations) j["violations"].push_back(violation_json(v));
    }
    if (r.cls == SolveClass::Underdetermined) {
      j["free_cells"] = json::array();
      for (const auto& c : r.free_cells) j["free_cells"].push_back({c.row, c.col});
    }
    out << j.dump() << "\n";
    return exit_code(r.cls);
  }

  out << "class=" << to_string(r.cls) << " rank=" << r.rank << " unknowns=" << r.unknowns << "\n";
  switch (r.cls) {
    case SolveClass::UniqueValid:
      out << format_grid(*r.solution);
      break;
    case SolveClass::Underdetermined:
      out << "free_cells=";
      for (std::size_t i = 0; i < r.free_cells.size(); ++i) out << (i ? " " : "") << cell_text(r.free_cells[i]);
      out << "\n";
      break;
    case SolveClass::UniqueInvalid:
      for (const auto& v : r.violations) out << "violation: " << v.describe() << "\n";
      out << "assignment:\n";
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          out << (j ? " " : "") << format_rational(r.assignment[static_cast<std::size_t>(i * n + j)]);
        }
        out << "\n";
      }
      break;
    case SolveClass::Inconsistent:
      break;
  }
  return exit_code(r.cls);
}

int cmd_verify(const Puzzle& puzzle, std::ostream& out, std::ostream& err) {
  const auto grid = puzzle.to_grid();
  if (!grid) {
    err << "error: grid has " << puzzle.unknown_count() << " blank cells; use solve\n";
    return kUsage;
  }
  const Validity v = validate_complete(*grid);
  out << (v.valid() ? "valid" : "invalid") << "\n";
  for (const auto& u : v.violated) out << "violated: " << u.name() << "\n";

  const std::vector<Rational> x(grid->values().begin(), grid->values().end());
  bool zero = true;
  for (const auto& r : residual(build_system(grid->spec()).matrix, x)) zero = zero && sgn(r) == 0;
  out << "residual=" << (zero ? "zero" : "nonzero") << "\n";
  return v.valid() ? kOk : kInvalid;
}

int cmd_count(const Puzzle& puzzle, std::uint64_t cap, std::ostream& out) {
  const Agreement a = compare_with_oracle(linear_solve(puzzle), count_completions(puzzle, cap));
  out << "count=" << a.oracle.count << " capped=" << (a.oracle.capped ? "yes" : "no") << "\n";
  out << "linear=" << to_string(a.linear.cls) << " agreement=" << (a.agrees ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-sum linear systems for Latin squares and Sudokus"};
  app.require_subcommand(1);

  SpecFlags rank_spec;
  std::string dump_path;
  bool table = false;
  int max_n = 9;
  auto* rank_cmd = app.add_subcommand("rank", "Rank of the unit-sum system versus the closed form");
  rank_spec.attach(*rank_cmd, false);
  rank_cmd->add_option("--dump-rref", dump_path, "write the reduced matrix to PATH");
  rank_cmd->add_flag("--table", table, "tabulate every order up to --max-n");
  rank_cmd->add_option("--max-n", max_n, "largest order in the table")->check(CLI::PositiveNumber);

  std::string solve_path;
  bool as_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a puzzle file with the linear system");
  solve_cmd->add_option("file", solve_path, "puzzle file, - for stdin")->required();
  solve_cmd->add_flag("--json", as_json, "machine-readable report");

  SpecFlags gen_spec;
  std::uint64_t seed = 0;
  bool max_linear = false;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a valid grid or its maximal linear puzzle");
  gen_spec.attach(*gen_cmd, true);
  gen_cmd->add_option("--seed", seed, "generator seed (0 = base pattern)");
  gen_cmd->add_flag("--max-linear", max_linear, "blank the pivot cells");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a completed grid");
  verify_cmd->add_option("file", verify_path, "grid file, - for stdin")->required();

  std::string count_path;
  std::uint64_t cap = 1000;
  auto* count_cmd = app.add_subcommand("count", "Count completions by exhaustive search");
  count_cmd->add_option("file", count_path, "puzzle file, - for stdin")->required();
  count_cmd->add_option("--cap", cap, "stop after this many completions")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"unitsum"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      if (table) {
        return rank_table(rank_spec.kind.empty() ? "sudoku" : rank_spec.kind, max_n, out);
      }
      if (rank_spec.kind.empty() || rank_spec.n == 0) {
        err << "error: rank needs --kind and --n (or --table)\n";
        return kUsage;
      }
      return rank_single(rank_spec.resolve(), dump_path, out, err);
    }
    if (solve_cmd->parsed()) return cmd_solve(load(solve_path), as_json, out);
    if (gen_cmd->parsed()) {
      const Grid grid = generate_complete(gen_spec.resolve(), seed);
      out << (max_linear ? format_puzzle(derive_max_linear_puzzle(grid)) : format_grid(grid));
      return kOk;
    }
    if (verify_cmd->parsed()) return cmd_verify(load(verify_path), out, err);
    if (count_cmd->parsed()) return cmd_count(load(count_path), cap, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace unitsum::cli
