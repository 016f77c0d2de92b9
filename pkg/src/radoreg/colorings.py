"""Colorings of finite domains and monochromatic-solution checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from .domains import IntegerInterval, RationalBox, rational_box
from .equations import Domain, LinearEquation, enumerate_solutions, evaluate
from .exactnum import (
    DomainError,
    ExtendedValuation,
    check_prime,
    format_rational,
    int_valuation,
    ord_p,
    to_rational,
)

__all__ = [
    "ValuationColoring",
    "TableColoring",
    "Coloring",
    "MonoSolution",
    "NoneFound",
    "Obstruction",
    "color_of",
    "coloring_from_json",
    "find_monochromatic_solution",
    "explain_obstruction",
    "rational_box",
    "RationalBox",
]


@dataclass(frozen=True)
class ValuationColoring:
    """Color r by ord_p(r) mod k.  Sign is irrelevant."""

    k: int
    p: int = 2

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"number of colors must be >= 1, got {self.k!r}")
        check_prime(self.p)

    @property
    def num_colors(self) -> int:
        return self.k

    def color(self, r) -> int:
        if isinstance(r, int) and not isinstance(r, bool):
            if r == 0:
                raise DomainError("zero has infinite valuation and no color")
            return int_valuation(r, self.p) % self.k
        r = to_rational(r)
        if r == 0:
            raise DomainError("zero has infinite valuation and no color")
        # Python's % already returns a residue in [0, k) for negative valuations.
        return ord_p(r, self.p) % self.k

    def covers(self, domain) -> bool:
        return True

    def to_json(self) -> dict:
        return {"kind": "valuation", "colors": self.k, "p": self.p}


@dataclass(frozen=True)
class TableColoring:
    """Explicit colors for 1..N; ``table[v - 1]`` is the color of v."""

    table: tuple
    num_colors: Optional[int] = None

    def __post_init__(self):
        table = tuple(int(c) for c in self.table)
        if not table:
            raise ValueError("table coloring needs at least one entry")
        n = self.num_colors if self.num_colors is not None else max(table) + 1
        if n < 1 or any(not 0 <= c < n for c in table):
            raise ValueError(f"table entries must lie in [0, {n})")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "num_colors", n)

    @property
    def N(self) -> int:
        return len(self.table)

    def color(self, r) -> int:
        r = to_rational(r)
        if r == 0:
            raise DomainError("zero has no color")
        if r.denominator != 1 or not 1 <= r.numerator <= self.N:
            raise DomainError(f"{format_rational(r)} is outside the table 1..{self.N}")
        return self.table[r.numerator - 1]

    def covers(self, domain) -> bool:
        return isinstance(domain, IntegerInterval) and domain.N <= self.N

    def to_json(self) -> dict:
        return {"kind": "table", "colors": self.num_colors, "table": list(self.table)}


Coloring = Union[ValuationColoring, TableColoring]


def color_of(c: Coloring, r) -> int:
    return c.color(r)


def coloring_from_json(doc: dict) -> Coloring:
    kind = doc.get("kind")
    if kind == "valuation":
        return ValuationColoring(int(doc["colors"]), int(doc.get("p", 2)))
    if kind == "table":
        return TableColoring(tuple(doc["table"]), doc.get("colors"))
    raise ValueError(f"unknown coloring kind {kind!r}")


@dataclass(frozen=True)
class MonoSolution:
    assignment: tuple
    color: int

    found = True

    def to_json(self) -> dict:
        return {
            "witness": "mono_solution",
            "assignment": [format_rational(v) for v in self.assignment],
            "color": self.color,
        }


@dataclass(frozen=True)
class NoneFound:
    domain: dict
    examined: int

    found = False

    def to_json(self) -> dict:
        return {"witness": "none_found", "domain": self.domain, "examined": self.examined}


@dataclass(frozen=True)
class Obstruction:
    """Term valuations ord_p(a_i) + ord_p(v_i) of one assignment.

    ``distinct`` is the certificate: distinct term valuations force the sum
    to have the minimum of them as its valuation, so it cannot vanish.
    ``collisions`` lists index pairs with equal term valuations.
    """

    term_valuations: tuple
    colors: tuple
    monochromatic: bool
    distinct: bool
    collisions: tuple = ()
    residual: Fraction = Fraction(0)
    residual_valuation: ExtendedValuation = field(default=None)

    @property
    def certified(self) -> bool:
        return self.monochromatic and self.distinct

    def to_json(self) -> dict:
        return {
            "witness": "obstruction",
            "term_valuations": [str(t) for t in self.term_valuations],
            "colors": list(self.colors),
            "monochromatic": self.monochromatic,
            "distinct": self.distinct,
            "collisions": [list(pair) for pair in self.collisions],
            "residual": format_rational(self.residual),
            "residual_valuation": str(self.residual_valuation),
        }


def find_monochromatic_solution(
    eq: LinearEquation,
    c: Coloring,
    domain: Domain,
    solutions: Optional[Sequence] = None,
    jobs: int = 1,
) -> Union[MonoSolution, NoneFound]:
    """First monochromatic solution in enumeration order, or a count of those checked.

    ``solutions`` may be passed to reuse an already enumerated solution list
    for the same equation and domain.
    """
    if not c.covers(domain):
        raise DomainError(f"coloring does not cover domain {domain.describe()}")
    if solutions is None:
        solutions = enumerate_solutions(eq, domain, jobs=jobs)
    color = c.color
    for asg in solutions:
        first = color(asg[0])
        if all(color(v) == first for v in asg[1:]):
            return MonoSolution(tuple(asg), first)
    return NoneFound(domain.describe(), len(solutions))


def explain_obstruction(eq: LinearEquation, asg: Sequence, k: int, p: int = 2) -> Obstruction:
    if len(asg) != eq.arity:
        raise ValueError(f"assignment has {len(asg)} values, equation has arity {eq.arity}")
    values = [to_rational(v) for v in asg]
    if any(v == 0 for v in values):
        raise DomainError("assignment values must be nonzero")
    coloring = ValuationColoring(k, p)
    colors = tuple(coloring.color(v) for v in values)
    terms = tuple(ord_p(a, p) + ord_p(v, p) for a, v in zip(eq.coeffs, values))
    collisions = tuple(
        (i, j) for i, j in combinations(range(len(terms)), 2) if terms[i] == terms[j]
    )
    residual = evaluate(eq, values)
    return Obstruction(
        term_valuations=terms,
        colors=colors,
        monochromatic=len(set(colors)) == 1,
        distinct=not collisions,
        collisions=collisions,
        residual=residual,
        residual_valuation=ord_p(residual, p),
    )
