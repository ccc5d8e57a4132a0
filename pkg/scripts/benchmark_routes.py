#!/usr/bin/env python3
"""Time the three Pfaffian routes against each other.

Prints a table of wall times for the recursive route, the perfect-matching
sum, and the minor summation right-hand side on generic symbolic matrices,
plus random rational points for larger sizes where the symbolic sum blows up.

Usage: python3 scripts/benchmark_routes.py [--max-total 8] [--seed 0]
"""

import argparse
import random
import time
from dataclasses import dataclass

from pfaffkit.pfaffian import (
    AntiAlternatingMatrix,
    minor_summation_rhs,
    pfaffian,
    pfaffian_definitional,
    pfaffian_of_anti_alternating,
)


@dataclass
class Config:
    max_total: int = 8
    seed: int = 0
    rational_repeats: int = 5


def clock(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def run(cfg: Config):
    print(f"{'coloring':>10} {'recursive':>12} {'matchings':>12} {'minor sum':>12}  agree")
    for total in range(2, cfg.max_total + 1, 2):
        for p in range(1, total):
            q = total - p
            X = AntiAlternatingMatrix.generic(p, q)
            A = X.to_alternating()
            lhs, t_rec = clock(lambda: pfaffian(A))
            defn, t_def = clock(lambda: pfaffian_definitional(A))
            rhs, t_msf = clock(lambda: minor_summation_rhs(X))
            agree = lhs == defn == rhs
            print(f"{f'({p},{q})':>10} {t_rec * 1000:>10.1f}ms {t_def * 1000:>10.1f}ms "
                  f"{t_msf * 1000:>10.1f}ms  {agree}")
            if not agree:
                raise SystemExit(f"routes disagree at ({p}, {q})")

    rng = random.Random(cfg.seed)
    print(f"\nrational points, {cfg.rational_repeats} repeats per coloring")
    for total in range(2, cfg.max_total + 1, 2):
        p = total // 2
        q = total - p
        t_all = 0.0
        for _ in range(cfg.rational_repeats):
            X = AntiAlternatingMatrix.random_rational(p, q, rng)
            _, dt = clock(lambda: pfaffian_of_anti_alternating(X) == minor_summation_rhs(X))
            t_all += dt
        print(f"  ({p},{q}): {t_all / cfg.rational_repeats * 1000:.1f}ms per identity check")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-total", type=int, default=8, help="largest p+q to try (even)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    run(Config(max_total=args.max_total, seed=args.seed, rational_repeats=args.repeats))


if __name__ == "__main__":
    main()
