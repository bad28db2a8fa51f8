#!/usr/bin/env python3
"""Run the full claim battery and write a JSON report.

Equivalent to `motzkinlab suite all --format json --out ...` with a summary
printed per claim; --deep switches to the extended ranges.
"""
from __future__ import annotations

import argparse
import sys

from motzkinlab.reports import reports_to_json
from motzkinlab.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="verification_report.json")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--deep", action="store_true")
    parser.add_argument("--suite", default="all")
    args = parser.parse_args()

    reports = run_suite(args.suite, deep=args.deep, jobs=args.jobs)
    with open(args.out, "w") as fh:
        fh.write(reports_to_json(reports))
    worst = 0
    for r in reports:
        print(f"{r.claim:<16} {r.status:<14} checked={r.params['checked']:<6} "
              f"{r.elapsed_ms:9.1f} ms")
        if r.status == "counterexample":
            worst = 1
            for ce in r.counterexamples[:3]:
                print(f"    witness {ce['params']}: {ce['lhs']} vs {ce['rhs']}")
    print(f"wrote {args.out}")
    return worst


if __name__ == "__main__":
    sys.exit(main())
