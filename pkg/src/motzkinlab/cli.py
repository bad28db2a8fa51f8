"""Command-line front end: sequence printing, claim verification, suite runs.

Exit codes: 0 all requested claims verified; 1 at least one counterexample
(witnesses are in the report output); 2 usage errors (unknown sequence,
claim, suite, or malformed flags).
"""
from __future__ import annotations

import argparse
import sys

from . import sequences as seq
from .reports import (InvalidRange, format_report_human, reports_to_csv,
                      reports_to_json)
from .verify import SUITES, UnknownClaim, UnknownSuite, run_suite, verify_claim

_SEQUENCES = {
    "motzkin": (0, seq.motzkin),
    "trinomial": (0, seq.central_trinomial),
    "catalan": (0, seq.catalan),
    "delannoy": (0, seq.delannoy),
    "schroder-little": (1, seq.schroder_little),
    "schroder-large": (0, seq.schroder_large),
    "W": (0, seq.motzkin_analog_w),
}

_GENERALIZED = {
    "motzkin": seq.gen_motzkin,
    "trinomial": seq.gen_trinomial,
}


def _int_set(text: str) -> tuple[int, ...]:
    """Parse '1,2,3' or '-4..4' (or a mix: '-4..-1,1..4') into a tuple."""
    out: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo_s, hi_s = token.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {token!r}")
            out.extend(range(lo, hi + 1))
        elif token:
            out.append(int(token))
    if not out:
        raise argparse.ArgumentTypeError(f"no integers in {text!r}")
    return tuple(out)


def _add_range_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-max", type=int, default=None, help="upper bound for n")
    p.add_argument("--prime-max", type=int, default=None, help="upper bound for primes")
    p.add_argument("--prime-min", type=int, default=None, help="lower bound for primes")
    p.add_argument("--b-set", type=_int_set, default=None,
                   help="b grid, e.g. --b-set=-4..4 or --b-set 1,2,3 "
                        "(use the = form when the value starts with '-')")
    p.add_argument("--c-set", type=_int_set, default=None, help="c grid")
    p.add_argument("--h-max", type=int, default=None, help="upper bound for exponent h")
    p.add_argument("--m-max", type=int, default=None, help="upper bound for power m")
    p.add_argument("--a-max", type=int, default=None,
                   help="upper bound for the first q-binomial exponent")
    p.add_argument("--b-exp-max", type=int, default=None,
                   help="upper bound for the second q-binomial exponent")
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--out", default=None, help="write the report to this path")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.add_argument("--stop-on-first", action="store_true",
                   help="stop at the first counterexample")


def _overrides_from(args) -> dict:
    mapping = (("n_max", args.n_max), ("prime_hi", args.prime_max),
               ("prime_lo", args.prime_min), ("b_set", args.b_set),
               ("c_set", args.c_set), ("h_max", args.h_max), ("m_max", args.m_max),
               ("qexp_a_max", args.a_max), ("qexp_b_max", args.b_exp_max))
    return {key: value for key, value in mapping if value is not None}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkinlab",
        description="Exact computation and mechanical verification of Motzkin / "
                    "central-trinomial sequence identities, congruences, and conjectures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a sequence table")
    p_seq.add_argument("name", help=f"one of {', '.join(_SEQUENCES)}")
    p_seq.add_argument("--max", type=int, default=10, dest="n_max",
                       help="largest index to print")
    p_seq.add_argument("--b", type=int, default=None)
    p_seq.add_argument("--c", type=int, default=None)

    p_verify = sub.add_parser("verify", help="verify one or more claims by id")
    p_verify.add_argument("claims", nargs="+", metavar="CLAIM")
    _add_range_flags(p_verify)

    p_suite = sub.add_parser("suite", help="run a named suite of claims")
    p_suite.add_argument("name", help=f"one of {', '.join(SUITES)}")
    p_suite.add_argument("--deep", action="store_true",
                         help="use the extended parameter ranges")
    _add_range_flags(p_suite)

    return parser


def _cmd_seq(args) -> int:
    name = args.name
    if name not in _SEQUENCES:
        print(f"error: unknown sequence {name!r}; choose from {', '.join(_SEQUENCES)}",
              file=sys.stderr)
        return 2
    use_params = args.b is not None or args.c is not None
    if use_params:
        if name not in _GENERALIZED:
            print(f"error: sequence {name!r} does not take --b/--c", file=sys.stderr)
            return 2
        if args.b is None or args.c is None:
            print("error: --b and --c must be given together", file=sys.stderr)
            return 2
        fn = _GENERALIZED[name]
        for n in range(0, args.n_max + 1):
            print(f"{n}\t{fn(n, args.b, args.c)}")
        return 0
    lo, fn = _SEQUENCES[name]
    if args.n_max < lo:
        print(f"error: --max must be >= {lo} for {name!r}", file=sys.stderr)
        return 2
    for n in range(lo, args.n_max + 1):
        print(f"{n}\t{fn(n)}")
    return 0


def _emit(reports, args) -> None:
    if args.format == "json":
        text = reports_to_json(reports)
    elif args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = "\n".join(format_report_human(r) for r in reports) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        summary = ", ".join(f"{r.claim}: {r.status}" for r in reports)
        print(f"wrote {args.out} ({summary})")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _exit_code(reports) -> int:
    return 1 if any(r.status == "counterexample" for r in reports) else 0


def _cmd_verify(args) -> int:
    overrides = _overrides_from(args)
    reports = []
    try:
        for claim_id in args.claims:
            reports.append(verify_claim(claim_id, overrides or None,
                                        stop_on_first=args.stop_on_first,
                                        jobs=args.jobs))
    except UnknownClaim as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidRange as exc:
        print(f"error: invalid range: {exc}", file=sys.stderr)
        return 2
    _emit(reports, args)
    return _exit_code(reports)


def _cmd_suite(args) -> int:
    overrides = _overrides_from(args)
    try:
        reports = run_suite(args.name, overrides or None, deep=args.deep,
                            stop_on_first=args.stop_on_first, jobs=args.jobs)
    except UnknownSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidRange as exc:
        print(f"error: invalid range: {exc}", file=sys.stderr)
        return 2
    _emit(reports, args)
    return _exit_code(reports)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "seq":
        return _cmd_seq(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_suite(args)


if __name__ == "__main__":
    sys.exit(main())
