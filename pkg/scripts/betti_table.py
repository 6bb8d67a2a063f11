"""Mod 2 Betti numbers of the free loop space, summand by summand.

    python scripts/betti_table.py --space HPn --n 2 --max-degree 40
"""

import argparse

from loopsplit.algebra import poincare
from loopsplit.loopspace import assemble_splitting, catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--space", default="CPn", choices=["CPn", "HPn", "OP2"])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--max-degree", type=int, default=40)
    args = ap.parse_args()

    e = catalog(args.space, args.n)
    sp = assemble_splitting(e, None, args.max_degree)
    D = args.max_degree
    rows = [("const", poincare(sp.constant_summand, D).coeffs)]
    rows += [(f"m={s.m}", poincare(s.summand, D).coeffs) for s in sp.strata]
    rows.append(("total", sp.poincare().coeffs))
    print("deg   " + " ".join(f"{d:>2}" for d in range(D + 1)))
    for name, coeffs in rows:
        print(f"{name:<6}" + " ".join(f"{c:>2}" if c else " ." for c in coeffs))


if __name__ == "__main__":
    main()
