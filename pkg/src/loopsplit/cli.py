"""``loopsplit`` command line.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .report import SPACE_IDS, table_report, to_json, to_text, verify_report


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loopsplit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--space", required=True, choices=sorted(SPACE_IDS))
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("verify", help="assemble the splitting and run every cross-check")
    common(v)
    v.add_argument("--max-degree", type=int, required=True)
    t = sub.add_parser("table", help="stratum table without cohomology")
    common(t)
    t.add_argument("--max-winding", type=int, required=True)
    return p


def _workers(parser) -> int:
    raw = os.environ.get("LOOPSPLIT_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        parser.error(f"LOOPSPLIT_THREADS must be an integer, got {raw!r}")
    if k < 1:
        parser.error("LOOPSPLIT_THREADS must be >= 1")
    return k


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.space == "op2" and args.n != 2:
            parser.error("op2 requires --n 2")
        if args.n < 2:
            parser.error("theorems require n >= 2")
        if args.command == "verify" and args.max_degree < 0:
            parser.error("--max-degree must be >= 0")
        if args.command == "table" and args.max_winding < 1:
            parser.error("--max-winding must be >= 1")
        workers = _workers(parser)
    except SystemExit as exc:
        return int(exc.code)

    try:
        if args.command == "verify":
            report = verify_report(args.space, args.n, args.max_degree, workers)
        else:
            report = table_report(args.space, args.n, args.max_winding)
    except Exception as exc:
        print(f"loopsplit: internal check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(to_json(report) if args.format == "json" else to_text(report))
    if args.command == "verify" and report["verdict"] != "PASS":
        failed = [c["name"] for c in report["checks"] if not c["pass"]]
        print(f"loopsplit: failed checks: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
