"""DIMACS CNF encoding of "1..N has a coloring with no monochromatic solution"."""
from __future__ import annotations

from typing import Optional, Sequence

from .domains import IntegerInterval
from .equations import LinearEquation, enumerate_solutions
from .regularity import constraint_sets


def var_id(x: int, c: int, num_colors: int) -> int:
    """Boolean variable for "value x gets color c"."""
    return (x - 1) * num_colors + c + 1


def cnf_clauses(
    sets: Sequence[tuple], num_colors: int, N: int, at_most_one: bool = False
) -> list[list[int]]:
    clauses = [[var_id(x, c, num_colors) for c in range(num_colors)] for x in range(1, N + 1)]
    if at_most_one:
        for x in range(1, N + 1):
            for c in range(num_colors):
                for d in range(c + 1, num_colors):
                    clauses.append([-var_id(x, c, num_colors), -var_id(x, d, num_colors)])
    for members in sets:
        for c in range(num_colors):
            clauses.append([-var_id(d, c, num_colors) for d in members])
    return clauses


def export_dimacs(
    eq: LinearEquation,
    num_colors: int,
    N: int,
    at_most_one: bool = False,
    solutions: Optional[Sequence] = None,
) -> str:
    if num_colors < 1 or N < 1:
        raise ValueError("num_colors and N must be >= 1")
    if solutions is None:
        solutions = enumerate_solutions(eq, IntegerInterval(N))
    clauses = cnf_clauses(constraint_sets(solutions), num_colors, N, at_most_one)
    lines = [
        f"c equation {eq.label or 'custom'}",
        f"c N {N}",
        f"c colors {num_colors}",
        f"p cnf {N * num_colors} {len(clauses)}",
    ]
    lines.extend(" ".join(map(str, clause)) + " 0" for clause in clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[list[int]]]:
    """Return (number of variables, clauses).  Comment lines are skipped."""
    nvars = nclauses = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line: {line!r}")
            nvars, nclauses = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if nvars is None:
        raise ValueError("missing 'p cnf' header")
    if current:
        raise ValueError("last clause is not terminated by 0")
    if len(clauses) != nclauses:
        raise ValueError(f"header declares {nclauses} clauses, found {len(clauses)}")
    return nvars, clauses
