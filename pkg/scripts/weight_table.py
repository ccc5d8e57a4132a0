#!/usr/bin/env python3
"""Tabulate the central Pfaffian's eigenvalue over a grid of dominant weights.

For each rank the element is built once; every weight is then evaluated both
through the normally ordered expansion and through the closed product form,
and the table flags any disagreement (none are expected).

Usage: python3 scripts/weight_table.py [--rank 2] [--max-part 4]
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from pfaffkit.uea import (
    HighestWeight,
    build_canonical_x,
    eigenvalue_factored_str,
    eigenvalue_product,
    hc_coefficient,
    nc_pfaffian,
)


@dataclass
class Config:
    rank: int = 2
    max_part: int = 4


def dominant_weights(n: int, max_part: int):
    # weakly decreasing nonnegative integer tuples
    for parts in product(range(max_part, -1, -1), repeat=n):
        if all(parts[i] >= parts[i + 1] for i in range(n - 1)):
            yield parts


def run(cfg: Config):
    n = cfg.rank
    z = nc_pfaffian(build_canonical_x(n))
    symbolic = eigenvalue_factored_str(HighestWeight.symbolic(n))
    print(f"rank {n}: eigenvalue = {symbolic}\n")
    print(f"{'weight':>16} {'expansion':>12} {'product':>12}")
    for parts in dominant_weights(n, cfg.max_part):
        w = HighestWeight.numeric([Fraction(x) for x in parts])
        via_z = hc_coefficient(z, w)
        via_prod = eigenvalue_product(w)
        marker = "" if via_z == via_prod else "   <- MISMATCH"
        print(f"{str(parts):>16} {str(via_z):>12} {str(via_prod):>12}{marker}")
        if via_z != via_prod:
            raise SystemExit(1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2, choices=(1, 2, 3))
    ap.add_argument("--max-part", type=int, default=4)
    args = ap.parse_args()
    run(Config(rank=args.rank, max_part=args.max_part))


if __name__ == "__main__":
    main()
