"""Unit-sum linear systems for Latin squares and Sudokus.

Grids are lists of rows; a blank cell is None (0 is accepted on input).
"""

from ._core import (
    ParseError,
    Spec,
    build_system,
    count_completions,
    expected_rank,
    format_puzzle,
    generate,
    max_linear_puzzle,
    parse_puzzle,
    pivot_pattern,
    rref,
    solve,
    system_rank,
    unit_sum,
    violated_units,
)

__all__ = [
    "ParseError",
    "Spec",
    "build_system",
    "count_completions",
    "expected_rank",
    "format_puzzle",
    "generate",
    "max_linear_puzzle",
    "parse_puzzle",
    "pivot_pattern",
    "rref",
    "solve",
    "system_rank",
    "unit_sum",
    "violated_units",
]
