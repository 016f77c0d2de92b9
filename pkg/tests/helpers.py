"""Brute-force oracles and a tiny DPLL, deliberately independent of the library paths."""
from fractions import Fraction
from itertools import product
from math import gcd


def divide_out_valuation(num, den, p):
    """ord_p(num/den) by repeated division; None stands for infinity."""
    if num == 0:
        return None
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def lk_coeffs(k):
    """Two-sided display of L_k moved to one side, written out term by term."""
    rhs = Fraction(-1)
    lhs = []
    for i in range(1, k):
        c = Fraction(2**i) / Fraction(2**i - 1)
        lhs.append(c)
        rhs += c
    return [-rhs] + lhs


def grid_solutions(coeffs, N):
    """Every tuple in 1..N^k that zeroes the form, in product order."""
    coeffs = [Fraction(c) for c in coeffs]
    return [
        t for t in product(range(1, N + 1), repeat=len(coeffs))
        if sum(c * x for c, x in zip(coeffs, t)) == 0
    ]


def reduced_box(H):
    return {
        Fraction(a, b)
        for a in range(-H, H + 1)
        for b in range(1, H + 1)
        if a != 0 and gcd(abs(a), b) == 1
    }


def ratio_oracle(coeffs, bound):
    """Positive ratios n/d (n, d <= bound) for which some 0/1 pattern of x=d and qx=n solves."""
    coeffs = [Fraction(c) for c in coeffs]
    k = len(coeffs)
    found = set()
    for n in range(1, bound + 1):
        for d in range(1, bound + 1):
            if n == d or gcd(n, d) != 1:
                continue
            for pattern in product((0, 1), repeat=k):
                if 0 < sum(pattern) < k:
                    values = [d if bit else n for bit in pattern]
                    if sum(c * v for c, v in zip(coeffs, values)) == 0:
                        found.add(Fraction(n, d))
    return found


def first_valid_coloring(solutions, num_colors, N):
    """Lexicographically first table coloring of 1..N with no monochromatic tuple."""
    tuples = [tuple(s) for s in solutions]
    for table in product(range(num_colors), repeat=N):
        if all(len({table[v - 1] for v in t}) > 1 for t in tuples):
            return table
    return None


def dpll(clauses, nvars):
    """Satisfiability of a CNF by plain DPLL with unit propagation."""

    def simplify(cls, lit):
        out = []
        for c in cls:
            if lit in c:
                continue
            reduced = [x for x in c if x != -lit]
            if not reduced:
                return None
            out.append(reduced)
        return out

    def solve(cls):
        while True:
            unit = next((c[0] for c in cls if len(c) == 1), None)
            if unit is None:
                break
            cls = simplify(cls, unit)
            if cls is None:
                return False
        if not cls:
            return True
        lit = cls[0][0]
        for choice in (lit, -lit):
            nxt = simplify(cls, choice)
            if nxt is not None and solve(nxt):
                return True
        return False

    return solve([list(c) for c in clauses])
