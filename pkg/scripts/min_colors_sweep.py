#!/usr/bin/env python3
"""Smallest N at which 1..N needs j colors, for L_k or M_k and each j <= k.

The powers-of-two chain gives N = 2^(k-1) for j = k; this sweep reports
whether a smaller interval already forces it.
"""
import argparse
from dataclasses import dataclass

from radoreg import BudgetExceeded, make_Lk, make_Mk, min_colors


@dataclass
class Config:
    family: str = "L"
    k_min: int = 2
    k_max: int = 5
    budget: int = 10_000_000


def thresholds(eq, k, budget):
    """First N where min_colors reaches each value 1..k."""
    first = {}
    N = 1
    while len(first) < k and N <= 2 ** (k - 1):
        m = min_colors(eq, N, budget=budget)
        for j in range(1, m + 1):
            first.setdefault(j, N)
        N += 1
    return first


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=["L", "M"], default=Config.family)
    ap.add_argument("--k-min", type=int, default=Config.k_min)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--budget", type=int, default=Config.budget)
    cfg = Config(**vars(ap.parse_args()))
    maker = make_Lk if cfg.family == "L" else make_Mk
    for k in range(cfg.k_min, cfg.k_max + 1):
        eq = maker(k)
        try:
            first = thresholds(eq, k, cfg.budget)
        except BudgetExceeded as exc:
            print(f"{eq.label}: {exc}")
            continue
        cells = "  ".join(f"{j}:{first.get(j, '-')}" for j in range(1, k + 1))
        print(f"{eq.label}: first N needing j colors  {cells}   (2^(k-1) = {2 ** (k - 1)})")


if __name__ == "__main__":
    main()
