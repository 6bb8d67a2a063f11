"""Run the full verification for every catalog space and print one line each.

    python scripts/sweep_catalog.py --max-degree 100
"""

import argparse

from loopsplit.report import verify_report

SWEEP = [("cpn", n) for n in range(2, 6)] + [("hpn", n) for n in range(2, 5)] + [("op2", 2)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=100)
    args = ap.parse_args()
    for space, n in SWEEP:
        rep = verify_report(space, n, args.max_degree)
        failed = [c["name"] for c in rep["checks"] if not c["pass"]]
        indices = [s["index"] for s in rep["strata"]]
        print(f"{space} n={n}: {rep['verdict']}  strata={len(indices)} indices={indices[:4]}... {failed or ''}")


if __name__ == "__main__":
    main()
