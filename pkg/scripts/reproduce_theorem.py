#!/usr/bin/env python3
"""Check both halves of the L_k degree-of-regularity result on finite domains.

For each k: the 2-adic coloring with k colors leaves no monochromatic solution
in 1..MAX, and exhaustive search refutes k-1 colors on 1..2^(k-1).
"""
import argparse
import time
from dataclasses import dataclass

from radoreg import (
    IntegerInterval,
    NoneFound,
    ValuationColoring,
    enumerate_solutions,
    find_monochromatic_solution,
    make_Lk,
    ratio_clique_lower_bound,
    search_coloring,
)


@dataclass
class Config:
    k_min: int = 2
    k_max: int = 5
    max_value: int = 64
    budget: int = 10_000_000


def run(cfg: Config):
    print(f"{'k':>2} {'solutions':>9} {'C_k mono':>8} {'clique':>6} {'k-1 colors':>10} "
          f"{'k colors':>8} {'nodes':>7} {'secs':>6}")
    ok = True
    for k in range(cfg.k_min, cfg.k_max + 1):
        t0 = time.perf_counter()
        eq = make_Lk(k)
        domain = IntegerInterval(cfg.max_value)
        sols = enumerate_solutions(eq, domain)
        w = find_monochromatic_solution(eq, ValuationColoring(k, 2), domain, solutions=sols)
        N = 2 ** (k - 1)
        clique, _ = ratio_clique_lower_bound(eq, N)
        lower = search_coloring(eq, k - 1, N, budget=cfg.budget)
        upper = search_coloring(eq, k, N, budget=cfg.budget)
        ok &= isinstance(w, NoneFound) and lower.status == "unsat" and upper.status == "sat"
        print(f"{k:>2} {len(sols):>9} {'none' if isinstance(w, NoneFound) else 'FOUND':>8} "
              f"{clique:>6} {lower.status:>10} {upper.status:>8} {lower.nodes + upper.nodes:>7} "
              f"{time.perf_counter() - t0:>6.2f}")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=Config.k_min)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--max", dest="max_value", type=int, default=Config.max_value)
    ap.add_argument("--budget", type=int, default=Config.budget)
    cfg = Config(**vars(ap.parse_args()))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
