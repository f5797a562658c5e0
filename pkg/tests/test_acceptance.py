"""Acceptance suite: every criterion at its stated grid and tolerance.

Each criterion is one test that prints a single PASS line with its timing
(visible with ``pytest -s``); all comparisons of exact quantities are
Fraction equality, the only tolerance anywhere is the 1e-9 relative bound of
the numeric eigenvalue cross-check.
"""

import random
import time
from fractions import Fraction
from itertools import permutations

from fibharmonic.circulant import (
    build_c1,
    build_c2,
    c1_euclid_sq_closed_form,
    c1_spectral_closed_form,
    eigenvalues_numeric,
    euclid_norm_sq_exact,
    norm_report,
    spectral_norm_exact,
)
from fibharmonic.exact_math import decimal_string, factorial, stirling1_unsigned, to_float
from fibharmonic.fib_harmonic import fib_harmonic, hyper_fib_harmonic
from fibharmonic.finite_calculus import summation_by_parts_sides
from fibharmonic.identities import verify
from fibharmonic.sequences import fibonacci, zeta_f1_partial

EIGEN_RTOL = 1e-9

# the full published 4x5 grid: (n, r) -> value
TABLE1 = {
    (1, 1): Fraction(1), (2, 1): Fraction(2), (3, 1): Fraction(5, 2),
    (4, 1): Fraction(17, 6), (5, 1): Fraction(91, 30),
    (1, 2): Fraction(1), (2, 2): Fraction(3), (3, 2): Fraction(11, 2),
    (4, 2): Fraction(25, 3), (5, 2): Fraction(341, 30),
    (1, 3): Fraction(1), (2, 3): Fraction(4), (3, 3): Fraction(19, 2),
    (4, 3): Fraction(107, 6), (5, 3): Fraction(146, 5),
    (1, 4): Fraction(1), (2, 4): Fraction(5), (3, 4): Fraction(29, 2),
    (4, 4): Fraction(97, 3), (5, 4): Fraction(923, 15),
}


def _report(number: int, label: str, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    print(f"ACCEPTANCE criterion {number} PASS ({label}) [{elapsed:.2f}s]")
    assert elapsed < budget, f"criterion {number} exceeded {budget}s budget: {elapsed:.2f}s"


def test_criterion_01_reference_grid():
    started = time.perf_counter()
    for (n, r), expected in TABLE1.items():
        assert hyper_fib_harmonic(n, r) == expected, (n, r)
    assert len(TABLE1) == 20
    _report(1, "20 tabulated values reproduced exactly", started, 1.0)


def test_criterion_02_reciprocal_sum_digits():
    started = time.perf_counter()
    value = zeta_f1_partial(100)
    assert decimal_string(value, 10) == "3.3598856662"
    _report(2, "partial sum at n=100 starts 3.3598856662", started, 1.0)


def test_criterion_03_partial_sum_identity_suite():
    started = time.perf_counter()
    keys = ["FH-T21", "FH-T22", "FH-T23", "FH-T24", "FH-T25", "FH-C26", "FH-T27", "FH-T28"]
    for key in keys:
        report = verify(key)  # base domain: n in 1..200, m in 0..6 where applicable
        assert report.passed, (key, report.failures[:3])
        assert report.grid_size >= 200
    _report(3, "8 partial-sum identities, n <= 200, m <= 6", started, 30.0)


def test_criterion_04_hyperharmonic_fibonacci_suite():
    started = time.perf_counter()
    expected_grids = {
        "HH-L32": 60 * 6,
        "HH-C34": 60 * 6,
        "HH-T33": sum(n * n for n in range(1, 41)),
        "HH-T35": 60 * 6 * 7,
        "HH-T35M": sum(n * n for n in range(1, 26)) * 16,
    }
    for key, grid in expected_grids.items():
        report = verify(key)
        assert report.passed, (key, report.failures[:3])
        assert report.grid_size == grid, key
    _report(4, "hyperharmonic Fibonacci identities incl. entrywise matrix form", started, 60.0)


def test_criterion_05_background_suite():
    started = time.perf_counter()
    keys = ["BG-H1", "BG-H2", "BG-H3", "BG-SP1", "BG-SP2", "BG-HH1", "BG-HH2", "BG-HHC", "BG-HSTIR"]
    for key in keys:
        report = verify(key)  # base domain: n in 1..300, r <= 6, m per coupling
        assert report.passed, (key, report.failures[:3])
        assert report.grid_size >= 300
    _report(5, "9 background identities, n <= 300", started, 60.0)


def test_criterion_06_exact_norms():
    started = time.perf_counter()

    # spectral closed form vs exact row sum, every n <= 300 (row sums and
    # closed-form tails accumulated incrementally; both sides independent)
    row_sum = Fraction(0)
    tail = Fraction(0)
    for n in range(1, 301):
        row_sum += fib_harmonic(n - 1)
        tail += Fraction(n, fibonacci(n))
        assert row_sum == n * fib_harmonic(n) - tail, n

    for r in range(1, 6):
        row_sum = Fraction(0)
        for n in range(1, 301):
            row_sum += hyper_fib_harmonic(n - 1, r)
            assert row_sum == hyper_fib_harmonic(n - 1, r + 1), (n, r)

    # squared Euclidean closed form, every n <= 200
    sq_sum = Fraction(0)
    tail = Fraction(0)
    for n in range(1, 201):
        k = n - 1
        fk = fib_harmonic(k)
        sq_sum += fk * fk
        tail += Fraction(k + 1, fibonacci(k + 1)) * (2 * fk + Fraction(1, fibonacci(k + 1)))
        assert n * sq_sum == n * n * fib_harmonic(n) ** 2 - n * tail, n

    # squared chain spectral^2 <= euclid_sq <= n * spectral^2 for every
    # constructed matrix: C1 for n <= 300 and C2 for n <= 300, r <= 5
    spectral = Fraction(0)
    euclid = Fraction(0)
    for n in range(1, 301):
        fk = fib_harmonic(n - 1)
        spectral += fk
        euclid += fk * fk
        sq = spectral * spectral
        assert sq <= n * euclid <= n * sq, n
    for r in range(1, 6):
        spectral = Fraction(0)
        euclid = Fraction(0)
        for n in range(1, 301):
            fk = hyper_fib_harmonic(n - 1, r)
            spectral += fk
            euclid += fk * fk
            sq = spectral * spectral
            assert sq <= n * euclid <= n * sq, (n, r)

    # the same checks through the public operations on a sparse schedule,
    # endpoints included
    for n in (1, 2, 3, 5, 8, 21, 55, 144, 300):
        c1 = build_c1(n)
        assert spectral_norm_exact(c1) == c1_spectral_closed_form(n)
        sq = spectral_norm_exact(c1) ** 2
        assert sq <= euclid_norm_sq_exact(c1) <= n * sq
        if n <= 200:
            assert euclid_norm_sq_exact(c1) == c1_euclid_sq_closed_form(n)
        for r in (1, 3, 5):
            c2 = build_c2(n, r)
            assert spectral_norm_exact(c2) == hyper_fib_harmonic(n - 1, r + 1)
            sq = spectral_norm_exact(c2) ** 2
            assert sq <= euclid_norm_sq_exact(c2) <= n * sq

    _report(6, "closed-form norms exact: spectral n<=300 (r<=5), euclid n<=200, chains", started, 60.0)


def test_criterion_07_eigenvalue_cross_check():
    started = time.perf_counter()

    def check(c):
        lam_max = max(abs(v) for v in eigenvalues_numeric(c))
        exact = to_float(spectral_norm_exact(c))
        if exact == 0.0:
            assert lam_max <= EIGEN_RTOL
        else:
            assert abs(lam_max - exact) <= EIGEN_RTOL * exact, c.n

    for n in range(1, 257):
        check(build_c1(n))
    for r in range(1, 6):
        for n in range(1, 129):
            check(build_c2(n, r))

    # norm_report bundles the same assertions; spot-check the largest sizes
    assert norm_report(build_c1(256), "C1").all_ok
    assert norm_report(build_c2(128, 5), "C2", 5).all_ok
    _report(7, "DFT max eigenvalue within 1e-9 of exact row sum", started, 120.0)


def test_criterion_08_oracles():
    started = time.perf_counter()

    # Stirling numbers against literal permutation-cycle enumeration
    def cycles(perm):
        seen = [False] * len(perm)
        count = 0
        for s in range(len(perm)):
            if not seen[s]:
                count += 1
                j = s
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
        return count

    for n in range(8):
        by_count: dict[int, int] = {}
        for perm in permutations(range(n)):
            c = cycles(perm)
            by_count[c] = by_count.get(c, 0) + 1
        for k in range(n + 1):
            assert stirling1_unsigned(n, k) == by_count.get(k, 0), (n, k)

    # harmonic numbers from the Stirling column, n <= 100
    acc = Fraction(0)
    for n in range(1, 101):
        acc += Fraction(1, n)
        assert Fraction(stirling1_unsigned(n + 1, 2), factorial(n)) == acc, n

    # summation by parts on 100 seeded random rational sequence pairs
    rng = random.Random(20260810)
    for trial in range(100):
        length = rng.randint(2, 51)
        useq = [Fraction(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(length)]
        vseq = [Fraction(rng.randint(-999, 999), rng.randint(1, 99)) for _ in range(length)]
        lhs, rhs = summation_by_parts_sides(
            lambda x: useq[x], lambda x: vseq[x], 0, length - 1
        )
        assert lhs == rhs, trial

    _report(8, "Stirling/harmonic/summation-by-parts oracles", started, 10.0)
