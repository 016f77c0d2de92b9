"""Homogeneous linear equations sum(a_i * x_i) = 0 and their finite solution sets."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Sequence, Union

from .domains import IntegerInterval, RationalBox
from .exactnum import ExtendedValuation, format_rational, ord_p, parse_rational, to_rational

Domain = Union[IntegerInterval, RationalBox]
Assignment = tuple


@dataclass(frozen=True)
class LinearEquation:
    coeffs: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        coeffs = tuple(to_rational(a) for a in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("an equation needs at least two variables")
        if all(a == 0 for a in coeffs):
            raise ValueError("at least one coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    @property
    def is_degenerate(self) -> bool:
        """True when the coefficients sum to zero, so every constant tuple is a solution."""
        return sum(self.coeffs) == 0

    def to_json(self) -> dict:
        doc = {
            "label": self.label,
            "arity": self.arity,
            "coeffs": [format_rational(a) for a in self.coeffs],
        }
        if self.is_degenerate:
            doc["degenerate"] = True
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "LinearEquation":
        coeffs = tuple(parse_rational(str(c)) for c in doc["coeffs"])
        if "arity" in doc and doc["arity"] != len(coeffs):
            raise ValueError(f"arity {doc['arity']} does not match {len(coeffs)} coefficients")
        return cls(coeffs, doc.get("label", ""))

    def homogeneous_form(self) -> str:
        terms = [f"({format_rational(a)})*x_{i}" for i, a in enumerate(self.coeffs) if a != 0]
        return " + ".join(terms) + " = 0"

    def two_sided_form(self) -> str:
        """Positive terms on the left, negated negative terms on the right."""

        def side(pairs):
            if not pairs:
                return "0"
            return " + ".join(
                f"x_{i}" if a == 1 else f"{format_rational(a)} x_{i}" for i, a in pairs
            )

        left = [(i, a) for i, a in enumerate(self.coeffs) if a > 0]
        right = [(i, -a) for i, a in enumerate(self.coeffs) if a < 0]
        return f"{side(left)} = {side(right)}"


def make_Lk(k: int) -> LinearEquation:
    """L_k: sum_{i>=1} 2^i/(2^i-1) x_i = (-1 + sum_{i>=1} 2^i/(2^i-1)) x_0."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    tail = [Fraction(2**i, 2**i - 1) for i in range(1, k)]
    return LinearEquation((1 - sum(tail), *tail), f"L_{k}")


def make_Mk(k: int) -> LinearEquation:
    """M_k: sum_{i<k-1} 2^i x_i = 2^(k-1) x_(k-1)."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    return LinearEquation((*(2**i for i in range(k - 1)), -(2 ** (k - 1))), f"M_{k}")


def coefficient_valuation_profile(eq: LinearEquation, p: int = 2) -> tuple[ExtendedValuation, ...]:
    return tuple(ord_p(a, p) for a in eq.coeffs)


def clear_denominators(eq: LinearEquation) -> tuple[LinearEquation, Fraction]:
    """Scale to coprime integer coefficients.

    Returns the scaled equation and the multiplier applied.  The multiplier
    is the lcm of the denominators divided by the gcd of the resulting
    numerators, so it is an integer whenever that gcd is 1.
    """
    m = lcm(*(a.denominator for a in eq.coeffs))
    ints = [int(a * m) for a in eq.coeffs]
    g = gcd(*ints)
    scaled = LinearEquation(tuple(c // g for c in ints), eq.label)
    return scaled, Fraction(m, g)


def evaluate(eq: LinearEquation, asg: Sequence) -> Fraction:
    if len(asg) != eq.arity:
        raise ValueError(f"assignment has {len(asg)} values, equation has arity {eq.arity}")
    return sum((a * to_rational(v) for a, v in zip(eq.coeffs, asg)), Fraction(0))


def is_solution(eq: LinearEquation, asg: Sequence) -> bool:
    return evaluate(eq, asg) == 0


def pivot_index(eq: LinearEquation) -> int:
    if eq.coeffs[0] != 0:
        return 0
    return next(i for i, a in enumerate(eq.coeffs) if a != 0)


def enumerate_solutions(eq: LinearEquation, domain: Domain, jobs: int = 1) -> list[Assignment]:
    """All solutions with every value in ``domain``.

    The pivot variable is solved for and the remaining variables run over the
    domain in lexicographic order (domain order, variables by index).  With
    ``jobs > 1`` an integer interval is split across processes by the first
    free variable; the merged output order is unchanged.
    """
    if isinstance(domain, IntegerInterval):
        return _interval_solutions(eq, domain.N, jobs)
    return _generic_solutions(eq, domain)


def _generic_solutions(eq: LinearEquation, domain) -> list[Assignment]:
    elements = list(domain.elements())
    members = set(elements)
    piv = pivot_index(eq)
    others = [i for i in range(eq.arity) if i != piv]
    a_piv = eq.coeffs[piv]
    out = []
    for values in product(elements, repeat=len(others)):
        s = sum((eq.coeffs[i] * v for i, v in zip(others, values)), Fraction(0))
        x = -s / a_piv
        if x in members:
            asg = [None] * eq.arity
            asg[piv] = x
            for i, v in zip(others, values):
                asg[i] = v
            out.append(tuple(asg))
    return out


def _interval_solutions(eq: LinearEquation, N: int, jobs: int = 1) -> list[Assignment]:
    ints, _ = clear_denominators(eq)
    c = [int(a) for a in ints.coeffs]
    piv = pivot_index(eq)
    others = [i for i in range(eq.arity) if i != piv]
    if jobs > 1 and len(others) >= 2 and N > 1:
        firsts = list(range(1, N + 1))
        chunks = [firsts[j::jobs] for j in range(jobs)]
        # Interleaved chunks keep load balanced; results are re-sorted by first value.
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_interval_chunk, [(c, piv, others, N, ch) for ch in chunks]))
        by_first: dict[int, list] = {}
        for part in parts:
            for first, sols in part:
                by_first[first] = sols
        return [s for first in range(1, N + 1) for s in by_first.get(first, [])]
    return [s for _, sols in _interval_chunk((c, piv, others, N, range(1, N + 1))) for s in sols]


def _interval_chunk(args):
    c, piv, others, N, first_values = args
    arity = len(c)
    c_piv = c[piv]
    inner = others[-1]
    outer = others[:-1]
    c_in = c[inner]
    g = gcd(c_piv, c_in)
    m = abs(c_piv) // g
    inv = pow((c_in // g) % m, -1, m) if c_in != 0 else 0
    rng = range(1, N + 1)

    def solve(prefix_sum, prefix, acc):
        # c_piv * x + c_in * y = -prefix_sum, with 1 <= x, y <= N
        if c_in == 0:
            if prefix_sum % c_piv or not 1 <= -prefix_sum // c_piv <= N:
                return
            x = -prefix_sum // c_piv
            for y in rng:
                acc.append(_place(arity, piv, x, outer, prefix, inner, y))
            return
        if prefix_sum % g:
            return
        y = ((-prefix_sum // g) * inv) % m
        if y == 0:
            y = m
        while y <= N:
            num = -prefix_sum - c_in * y
            x = num // c_piv
            if 1 <= x <= N:
                acc.append(_place(arity, piv, x, outer, prefix, inner, y))
            y += m

    if not outer:
        acc = []
        solve(0, (), acc)
        return [(None, acc)]

    results = []
    c_outer = [c[i] for i in outer]
    for first in first_values:
        acc = []
        base = c_outer[0] * first
        for rest in product(rng, repeat=len(outer) - 1):
            s = base
            for ci, v in zip(c_outer[1:], rest):
                s += ci * v
            solve(s, (first, *rest), acc)
        results.append((first, acc))
    return results


def _place(arity, piv, x, outer, prefix, inner, y):
    asg = [0] * arity
    asg[piv] = x
    for i, v in zip(outer, prefix):
        asg[i] = v
    asg[inner] = y
    return tuple(asg)
