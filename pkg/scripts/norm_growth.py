#!/usr/bin/env python3
"""Emit a CSV of exact and numeric circulant norms as the size grows.

Handy for eyeballing how the spectral norm tracks the Euclidean norm inside
the sqrt(n) corridor. Writes to stdout:

    python scripts/norm_growth.py --n-max 64 --r 2 > norms.csv
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from fibharmonic.circulant import build_c1, build_c2, norm_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=64)
    parser.add_argument("--r", type=int, default=None, help="order; omit for the order-1 family")
    args = parser.parse_args()
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "spectral", "euclid", "sqrt_n_times_spectral", "chain_ok"])
    for n in range(1, args.n_max + 1):
        if args.r is None:
            result = norm_report(build_c1(n), "C1")
        else:
            result = norm_report(build_c2(n, args.r), "C2", args.r)
        writer.writerow(
            [
                n,
                f"{result.spectral_numeric:.12g}",
                f"{result.euclid_numeric:.12g}",
                f"{math.sqrt(n) * result.spectral_numeric:.12g}",
                result.all_ok,
            ]
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
