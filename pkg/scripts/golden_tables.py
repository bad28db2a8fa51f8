#!/usr/bin/env python3
"""Print the three golden value tables (s, t, W) side by side."""
from __future__ import annotations

import argparse

from motzkinlab import s_quotient, t_quotient
from motzkinlab.sequences import motzkin_analog_w


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=12, help="largest index")
    args = parser.parse_args()
    hi = args.max
    print(f"{'n':>4} {'s(n)':>22} {'t(n)':>22} {'W(n)':>22}")
    for n in range(hi + 1):
        s = s_quotient(n) if n >= 1 else ""
        t = t_quotient(n) if n >= 2 else ""
        w = motzkin_analog_w(n)
        print(f"{n:>4} {s!s:>22} {t!s:>22} {w!s:>22}")


if __name__ == "__main__":
    main()
