#!/usr/bin/env python3
"""Show how the canonical 2-form's powers split into block Pfaffian sums.

Walks up the powers of omega = theta' + 2 xi + theta for one rank, printing
the trinomial split at each power and, at the top, the Pfaffian recovered
from the single surviving coefficient.

Usage: python3 scripts/form_expansion.py [--rank 2] [--mode uea]
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from pfaffkit.grassmann import build_forms, check_trinomial, pfaffian_from_top_form
from pfaffkit.pfaffian import AntiAlternatingMatrix, pfaffian_of_anti_alternating
from pfaffkit.uea import build_canonical_x, nc_pfaffian


@dataclass
class Config:
    rank: int = 2
    mode: str = "uea"


def run(cfg: Config):
    n, mode = cfg.rank, cfg.mode
    forms = build_forms(mode, n=n) if mode == "uea" else build_forms(mode, p=n, q=n)
    print(f"mode {mode}, rank {n}")
    print(f"omega = {forms.omega}\n")
    for m in range(n + 1):
        ok = check_trinomial(n, m, mode=mode, forms=forms)
        print(f"omega^{m}: trinomial split {'holds' if ok else 'FAILS'}")
        if not ok:
            raise SystemExit(1)

    top = forms.omega.power(n, one=forms.one()).top_coefficient()
    scale = Fraction(2**n * factorial(n))
    print(f"\ntop coefficient of omega^{n} = {top}")
    if mode == "uea":
        recovered = pfaffian_from_top_form("uea", n=n)
        reference = nc_pfaffian(build_canonical_x(n))
    else:
        recovered = pfaffian_from_top_form("commutative", p=n, q=n)
        reference = pfaffian_of_anti_alternating(AntiAlternatingMatrix.generic(n, n))
    print(f"top / (2^{n} {n}!) = top / {scale} = {recovered}")
    print(f"matches the Pfaffian: {recovered == reference}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--mode", choices=("uea", "commutative"), default="uea")
    args = ap.parse_args()
    run(Config(rank=args.rank, mode=args.mode))


if __name__ == "__main__":
    main()
