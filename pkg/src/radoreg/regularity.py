"""Lower bounds on the number of colors: forbidden ratios, ratio cliques, exhaustive search."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .colorings import NoneFound, TableColoring, find_monochromatic_solution
from .domains import IntegerInterval
from .equations import LinearEquation, enumerate_solutions
from .exactnum import format_rational, to_rational

MAX_RATIO_ARITY = 24
EXACT_CLIQUE_LIMIT = 32
DEFAULT_BUDGET = 10_000_000
BUDGET_ENV = "RADOREG_BUDGET"


class ResourceError(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, result: "SearchResult"):
        super().__init__(f"search budget of {result.budget} nodes exceeded")
        self.result = result


@dataclass(frozen=True)
class ForbiddenRatio:
    """x on ``subset`` and q*x elsewhere solves the equation for every x."""

    q: Fraction
    subset: frozenset = field(compare=False)

    def check(self, eq: LinearEquation) -> bool:
        a_in = sum((eq.coeffs[i] for i in self.subset), Fraction(0))
        a_out = sum(eq.coeffs) - a_in
        return a_in + self.q * a_out == 0

    def to_json(self) -> dict:
        return {"ratio": format_rational(self.q), "subset": sorted(self.subset)}


def forbidden_ratios(eq: LinearEquation, allow_negative: bool = False) -> list[ForbiddenRatio]:
    """Ratios q = -A_S / A_{S^c} over nonempty proper subsets S, sorted by q.

    Each ratio keeps the first subset (by bitmask) that produces it.
    """
    k = eq.arity
    if k > MAX_RATIO_ARITY:
        raise ResourceError(f"arity {k} exceeds the subset-enumeration limit {MAX_RATIO_ARITY}")
    total = sum(eq.coeffs)
    seen: dict[Fraction, frozenset] = {}
    for mask in range(1, (1 << k) - 1):
        subset = frozenset(i for i in range(k) if mask >> i & 1)
        a_in = sum((eq.coeffs[i] for i in subset), Fraction(0))
        a_out = total - a_in
        if a_out == 0:
            continue
        q = -a_in / a_out
        if q == 1 or q == 0 or (q < 0 and not allow_negative):
            continue
        seen.setdefault(q, subset)
    return [ForbiddenRatio(q, s) for q, s in sorted(seen.items())]


def substitution_check(eq: LinearEquation, j: int, q) -> bool:
    """Does x_j = x, x_i = q*x (i != j) solve the equation identically in x?"""
    if not 0 <= j < eq.arity:
        raise IndexError(f"variable index {j} out of range for arity {eq.arity}")
    q = to_rational(q)
    if q == 0:
        raise ValueError("ratio must be nonzero")
    rest = sum(eq.coeffs) - eq.coeffs[j]
    return eq.coeffs[j] + q * rest == 0


def conflict_graph(eq: LinearEquation, N: int) -> dict[int, set]:
    """Adjacency on 1..N: x ~ y when y/x is a positive forbidden ratio."""
    adj = {v: set() for v in range(1, N + 1)}
    for fr in forbidden_ratios(eq):
        q = fr.q
        if q <= 1:
            continue
        n, d = q.numerator, q.denominator
        for x in range(d, N + 1, d):
            y = x // d * n
            if y > N:
                break
            adj[x].add(y)
            adj[y].add(x)
    return adj


def _clique_key(clique):
    return (-len(clique), sorted(clique))


def _greedy_clique(adj: dict[int, set], ratios: Sequence[Fraction], N: int) -> list[int]:
    best: list[int] = []
    for q in ratios:
        for start in range(1, N + 1):
            clique = [start]
            x = Fraction(start) * q
            while x.denominator == 1 and x <= N:
                v = int(x)
                if all(v in adj[u] for u in clique):
                    clique.append(v)
                x *= q
            for v in range(1, N + 1):
                if v not in clique and all(v in adj[u] for u in clique):
                    clique.append(v)
            if _clique_key(clique) < _clique_key(best):
                best = clique
    return sorted(best) if best else [1]


def _max_clique(adj: dict[int, set]) -> list[int]:
    best: list[int] = []

    def expand(r, p, x):
        nonlocal best
        if not p and not x:
            if _clique_key(r) < _clique_key(best):
                best = sorted(r)
            return
        if len(r) + len(p) < len(best):
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(adj), set())
    return best


def ratio_clique_lower_bound(eq: LinearEquation, N: int) -> tuple[int, tuple]:
    """A clique of pairwise forbidden-ratio conflicts in 1..N.

    Greedy extension of geometric chains always runs; for N up to 32 the
    exact maximum clique replaces it.  Ties go to the lexicographically
    smallest sorted clique.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    adj = conflict_graph(eq, N)
    ratios = [fr.q for fr in forbidden_ratios(eq) if fr.q > 1]
    clique = _greedy_clique(adj, ratios, N)
    if N <= EXACT_CLIQUE_LIMIT:
        exact = _max_clique(adj)
        if _clique_key(exact) < _clique_key(clique):
            clique = exact
    return len(clique), tuple(clique)


@dataclass(frozen=True)
class SearchResult:
    status: str  # "sat", "unsat" or "budget"
    table: Optional[tuple]
    nodes: int
    tuples: int
    num_colors: int
    N: int
    budget: int = DEFAULT_BUDGET

    @property
    def witness(self) -> Optional[TableColoring]:
        if self.table is None:
            return None
        return TableColoring(self.table, self.num_colors)

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "table": list(self.table) if self.table is not None else None,
            "nodes": self.nodes,
            "tuples": self.tuples,
        }


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    budget = int(raw)
    if budget <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return budget


def constraint_sets(solutions: Sequence) -> list[tuple]:
    """Distinct-value sets of the solution tuples, deduplicated in first-seen order."""
    seen = {}
    for asg in solutions:
        key = tuple(sorted(set(int(v) for v in asg)))
        seen.setdefault(key, None)
    return list(seen)


def search_coloring(
    eq: LinearEquation,
    num_colors: int,
    N: int,
    symmetry_breaking: bool = True,
    budget: Optional[int] = None,
    solutions: Optional[Sequence] = None,
    jobs: int = 1,
) -> SearchResult:
    """Backtracking search for a coloring of 1..N with no monochromatic solution.

    Values are colored in ascending order and colors tried in ascending
    order.  Unit propagation on the "not all members one color" constraints
    only prunes dead branches, so the first coloring found is the
    lexicographically first valid one (symmetry breaking restricts the
    search to first-occurrence-ordered colorings, which contains it).
    """
    if num_colors < 1:
        raise ValueError("num_colors must be >= 1")
    if N < 1:
        raise ValueError("N must be >= 1")
    if budget is None:
        budget = default_budget()
    if budget <= 0:
        raise ValueError("budget must be positive")
    if solutions is None:
        solutions = enumerate_solutions(eq, IntegerInterval(N), jobs=jobs)
    sets = constraint_sets(solutions)
    status, table, nodes = _backtrack(sets, num_colors, N, symmetry_breaking, budget)
    result = SearchResult(status, table, nodes, len(sets), num_colors, N, budget)
    if status == "sat":
        check = find_monochromatic_solution(
            eq, result.witness, IntegerInterval(N), solutions=solutions
        )
        if not isinstance(check, NoneFound):
            raise AssertionError(f"search produced an invalid coloring: {check}")
    return result


def _backtrack(sets, C, N, symmetry_breaking, budget):
    full = (1 << C) - 1
    dom = [full] * (N + 1)
    watch = [[] for _ in range(N + 1)]
    for idx, members in enumerate(sets):
        if len(members) == 1:
            return "unsat", None, 0
        for v in members:
            watch[v].append(idx)
    trail: list[tuple[int, int]] = []

    def restrict(v, mask, queue):
        trail.append((v, dom[v]))
        dom[v] = mask
        if mask & (mask - 1) == 0:
            queue.append(v)

    def propagate(queue):
        while queue:
            v = queue.pop()
            bit = dom[v]
            for idx in watch[v]:
                open_member = None
                satisfied = False
                for u in sets[idx]:
                    du = dom[u]
                    if du == bit:
                        continue
                    if du & bit == 0:
                        satisfied = True
                        break
                    if open_member is not None:
                        satisfied = True  # two members still free to avoid this color
                        break
                    open_member = u
                if satisfied:
                    continue
                if open_member is None:
                    return False
                reduced = dom[open_member] & ~bit
                if reduced == 0:
                    return False
                restrict(open_member, reduced, queue)
        return True

    def undo(mark):
        while len(trail) > mark:
            v, old = trail.pop()
            dom[v] = old

    if C == 1 and not propagate(list(range(1, N + 1))):
        return "unsat", None, 0

    nodes = 0
    # frame: [value, candidate colors, next candidate index, trail mark, max color used before value]
    stack = []
    v, maxused = 1, -1
    while True:
        if v > N:
            table = tuple(dom[u].bit_length() - 1 for u in range(1, N + 1))
            return "sat", table, nodes
        limit = min(C - 1, maxused + 1) if symmetry_breaking else C - 1
        cands = [c for c in range(limit + 1) if dom[v] >> c & 1]
        stack.append([v, cands, 0, len(trail), maxused])
        advanced = False
        while stack and not advanced:
            frame = stack[-1]
            fv, fcands, i, mark, fmax = frame
            undo(mark)
            if i >= len(fcands):
                stack.pop()
                continue
            frame[2] = i + 1
            c = fcands[i]
            nodes += 1
            if nodes > budget:
                return "budget", None, nodes
            queue = []
            bit = 1 << c
            if dom[fv] != bit:
                restrict(fv, bit, queue)
            else:
                queue.append(fv)
            if propagate(queue):
                v, maxused = fv + 1, max(fmax, c)
                advanced = True
        if not advanced:
            return "unsat", None, nodes


def min_colors(
    eq: LinearEquation, N: int, budget: Optional[int] = None, jobs: int = 1
) -> int:
    """Fewest colors admitting a coloring of 1..N with no monochromatic solution."""
    if N < 1:
        raise ValueError("N must be >= 1")
    solutions = enumerate_solutions(eq, IntegerInterval(N), jobs=jobs)
    if any(len(set(asg)) == 1 for asg in solutions):
        raise ValueError(
            f"{eq.label or 'equation'} has constant solutions; no number of colors suffices"
        )
    for j in range(1, N + 1):
        result = search_coloring(eq, j, N, budget=budget, solutions=solutions)
        if result.status == "budget":
            raise BudgetExceeded(result)
        if result.status == "sat":
            return j
    raise AssertionError("N colors always suffice when no solution is constant")
