#!/usr/bin/env python3
"""Run the whole verification surface in one shot and print a summary.

Covers the identity registry at a chosen scale, exact-vs-closed-form norm
sweeps for both circulant families, the eigenvalue cross-check on a sparse
schedule, and the reciprocal-Fibonacci digit check.

Usage:
    python scripts/full_verification.py
    python scripts/full_verification.py --scale large --norm-max 300
"""

from __future__ import annotations

import argparse
import sys
import time

from fibharmonic.circulant import build_c1, build_c2, norm_report
from fibharmonic.exact_math import decimal_string
from fibharmonic.identities import verify_all
from fibharmonic.sequences import zeta_f1_partial


def run_identities(scale: str) -> bool:
    print(f"== identity registry (scale={scale}) ==")
    ok = True
    for report in verify_all(scale):
        status = "ok" if report.passed else "FAIL"
        print(
            f"  {report.key:<9} grid={report.grid_size:<7}"
            f" failures={len(report.failures):<4} {report.elapsed_ms:9.1f} ms  {status}"
        )
        ok &= report.passed
    return ok


def run_norms(n_max: int, r_max: int) -> bool:
    print(f"== circulant norm reports (n up to {n_max}, r up to {r_max}) ==")
    ok = True
    schedule = [1, 2, 5, 13, 34, 89]
    schedule = [n for n in schedule if n <= n_max] + [n_max]
    for n in schedule:
        result = norm_report(build_c1(n), "C1")
        ok &= result.all_ok
        print(f"  C1 n={n:<4} spectral={result.spectral_numeric:.6f} ok={result.all_ok}")
    for r in range(1, r_max + 1):
        result = norm_report(build_c2(n_max, r), "C2", r)
        ok &= result.all_ok
        print(f"  C2 n={n_max} r={r} spectral={result.spectral_numeric:.6e} ok={result.all_ok}")
    return ok


def run_digits() -> bool:
    value = zeta_f1_partial(100)
    text = decimal_string(value, 10)
    ok = text == "3.3598856662"
    print(f"== reciprocal Fibonacci partial sum at n=100: {text} ok={ok} ==")
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--scale", choices=("small", "default", "large"), default="default")
    parser.add_argument("--norm-max", type=int, default=128)
    parser.add_argument("--r-max", type=int, default=5)
    args = parser.parse_args()

    started = time.perf_counter()
    ok = run_identities(args.scale)
    ok &= run_norms(args.norm_max, args.r_max)
    ok &= run_digits()
    print(f"total {time.perf_counter() - started:.1f}s -> {'ALL OK' if ok else 'FAILURES'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
