"""Exact rationals and p-adic valuations.

Rationals are :class:`fractions.Fraction`, which already keeps values in lowest
terms with a positive denominator.  This module adds the canonical text form,
a small dispatch helper for arithmetic, and ``ord_p`` with an explicit
infinity for zero.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class _Infinity:
    """Positive infinity, the valuation of zero.

    Compares greater than every integer and absorbs integer addition.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("radoreg.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

# int for finite valuations, INF for ord_p(0)
ExtendedValuation = Union[int, _Infinity]


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or text like ``"-7/3"`` to a Fraction.

    Floats are rejected: nothing in this package may round.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(r: Fraction) -> str:
    """Canonical text: ``"n"`` for integers, ``"n/d"`` otherwise."""
    r = to_rational(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def normalize(r) -> Fraction:
    r = to_rational(r)
    return Fraction(r.numerator, r.denominator)


def rational_arith(a, b=None, op: str = "add") -> Fraction:
    """Apply ``op`` (add, sub, mul, neg, recip) exactly.

    ``neg`` and ``recip`` are unary and ignore ``b``.
    """
    a = to_rational(a)
    if op == "neg":
        return -a
    if op == "recip":
        if a == 0:
            raise DomainError("reciprocal of zero")
        return 1 / a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    b = to_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime integer, got {p!r}")
    return p


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in a nonzero integer n.  p is assumed prime."""
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(r, p: int = 2) -> ExtendedValuation:
    """p-adic valuation of a rational; ``INF`` for zero."""
    check_prime(p)
    r = to_rational(r)
    if r == 0:
        return INF
    return int_valuation(r.numerator, p) - int_valuation(r.denominator, p)
