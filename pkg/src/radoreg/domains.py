"""Finite verification domains: integer intervals and bounded-height rational boxes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class IntegerInterval:
    """The integers 1..N."""

    N: int

    def __post_init__(self):
        if isinstance(self.N, bool) or not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"interval bound must be a positive integer, got {self.N!r}")

    def elements(self) -> list[int]:
        return list(range(1, self.N + 1))

    def __contains__(self, x) -> bool:
        if not isinstance(x, (int, Fraction)):
            return False
        return x == int(x) and 1 <= x <= self.N

    def __len__(self):
        return self.N

    def describe(self) -> dict:
        return {"kind": "interval", "max": self.N}


@dataclass(frozen=True)
class RationalBox:
    """Nonzero reduced fractions a/b with |a| <= H and 1 <= b <= H."""

    H: int

    def __post_init__(self):
        if isinstance(self.H, bool) or not isinstance(self.H, int) or self.H < 1:
            raise ValueError(f"box height must be a positive integer, got {self.H!r}")

    def elements(self) -> list[Fraction]:
        return rational_box(self.H)

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return x != 0 and abs(x.numerator) <= self.H and x.denominator <= self.H

    def __len__(self):
        return len(self.elements())

    def describe(self) -> dict:
        return {"kind": "rational_box", "height": self.H}


def rational_box(H: int) -> list[Fraction]:
    """All elements of the height-H box, ordered ascending by (denominator, numerator)."""
    if H < 1:
        raise ValueError("height must be >= 1")
    return [
        Fraction(a, b)
        for b in range(1, H + 1)
        for a in range(-H, H + 1)
        if a != 0 and gcd(a, b) == 1
    ]
