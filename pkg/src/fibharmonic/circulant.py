"""Circulant matrices generated by harmonic and hyperharmonic Fibonacci
numbers: exact spectral and squared Euclidean norms, plus an independent
double-precision DFT eigenvalue cross-check.

For a nonnegative circulant the spectral norm equals its dominant
eigenvalue, which is the common row sum; all inequality checks between the
spectral and Euclidean norms are performed on squares so they stay exact
rational comparisons (no square roots). Floating point appears only in the
eigenvalue cross-check and the human-facing numeric fields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_math import format_rational, to_float
from .fib_harmonic import fib_harmonic, hyper_fib_harmonic
from .sequences import fibonacci

EIGENVALUE_RTOL = 1e-9


@dataclass(frozen=True)
class Circulant:
    """Circulant matrix held as its first row; row i is the right cyclic
    shift of row i-1 and is never materialized unless asked for."""

    n: int
    first_row: tuple[Fraction, ...]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.first_row[-i:] + self.first_row[:-i] if i else self.first_row


def build_c1(n: int) -> Circulant:
    """Circulant of the first n harmonic Fibonacci numbers FH(0..n-1)."""
    if n < 1:
        raise ValueError("build_c1 requires n >= 1")
    return Circulant(n, tuple(fib_harmonic(k) for k in range(n)))


def build_c2(n: int, r: int) -> Circulant:
    """Circulant of the order-r hyperharmonic Fibonacci numbers FH(0..n-1; r)."""
    if n < 1:
        raise ValueError("build_c2 requires n >= 1")
    if r < 1:
        raise ValueError("build_c2 requires r >= 1")
    return Circulant(n, tuple(hyper_fib_harmonic(k, r) for k in range(n)))


def spectral_norm_exact(c: Circulant) -> Fraction:
    """Spectral norm of a nonnegative circulant: the common row sum, which
    is its dominant eigenvalue; |c0| in the degenerate 1x1 case.

    Negative entries are rejected because the row-sum shortcut is only
    valid for nonnegative matrices.
    """
    if any(x < 0 for x in c.first_row):
        raise ValueError("spectral_norm_exact requires nonnegative entries")
    if c.n == 1:
        return abs(c.first_row[0])
    return sum(c.first_row, Fraction(0))


def euclid_norm_sq_exact(c: Circulant) -> Fraction:
    """Squared Euclidean (Frobenius) norm: n * sum of squared first-row
    entries, since every row is a permutation of the first."""
    return c.n * sum((x * x for x in c.first_row), Fraction(0))


def eigenvalues_numeric(c: Circulant) -> list[complex]:
    """All eigenvalues lambda_j = sum_k c_k * omega^(j*k) with
    omega = exp(2*pi*i/n): a direct O(n^2) DFT of the first row in double
    precision (entries converted by correctly-rounded exact division)."""
    row = np.array([to_float(x) for x in c.first_row], dtype=float)
    idx = np.arange(c.n)
    omega = np.exp((2j * math.pi / c.n) * np.outer(idx, idx))
    return [complex(v) for v in omega @ row]


def c1_spectral_closed_form(n: int) -> Fraction:
    """n*FH(n) - sum_{k=0}^{n-1} (k+1)/F(k+1)."""
    tail = sum((Fraction(k + 1, fibonacci(k + 1)) for k in range(n)), Fraction(0))
    return n * fib_harmonic(n) - tail


def c1_euclid_sq_closed_form(n: int) -> Fraction:
    """n^2*FH(n)^2 - n * sum_{k=0}^{n-1} ((k+1)/F(k+1)) * (2*FH(k) + 1/F(k+1))."""
    tail = sum(
        (
            Fraction(k + 1, fibonacci(k + 1))
            * (2 * fib_harmonic(k) + Fraction(1, fibonacci(k + 1)))
            for k in range(n)
        ),
        Fraction(0),
    )
    return n * n * fib_harmonic(n) ** 2 - n * tail


def c2_spectral_closed_form(n: int, r: int) -> Fraction:
    """FH(n-1; r+1), the closed form of the order-r circulant's row sum."""
    return hyper_fib_harmonic(n - 1, r + 1)


@dataclass(frozen=True)
class NormResult:
    """Exact and numeric norms of one circulant plus the verdicts of the
    internal cross-checks.

    ``chain_exact_ok`` is the squared inequality chain
    spectral^2 <= euclid_sq <= n * spectral^2 as exact rational comparisons;
    ``perron_ok`` compares the DFT's maximum eigenvalue modulus against the
    exact spectral norm at relative tolerance EIGENVALUE_RTOL; and
    ``closed_form_ok`` checks the row sum against the kind's closed form.
    """

    n: int
    kind: str
    r: int | None
    spectral_exact: Fraction
    euclid_sq_exact: Fraction
    spectral_numeric: float
    euclid_numeric: float
    lambda_max_numeric: float
    chain_exact_ok: bool
    perron_ok: bool
    closed_form_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.chain_exact_ok and self.perron_ok and self.closed_form_ok

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "kind": self.kind,
            "spectral_exact": format_rational(self.spectral_exact),
            "euclid_sq_exact": format_rational(self.euclid_sq_exact),
            "spectral_numeric": self.spectral_numeric,
            "euclid_numeric": self.euclid_numeric,
            "lambda_max_numeric": self.lambda_max_numeric,
            "chain_ok": self.all_ok,
        }
        if self.r is not None:
            out["r"] = self.r
        return out


def norm_report(c: Circulant, kind: str, r: int | None = None) -> NormResult:
    """Bundle exact and numeric norms with every internal assertion.

    ``kind`` is "C1" or "C2"; C2 carries the order ``r`` used to build the
    circulant. Verdicts are reported as booleans rather than raised, so a
    failed cross-check is visible data.
    """
    if kind not in ("C1", "C2"):
        raise ValueError("kind must be 'C1' or 'C2'")
    if kind == "C2" and (r is None or r < 1):
        raise ValueError("kind 'C2' requires r >= 1")
    if kind == "C1":
        r = None

    spectral = spectral_norm_exact(c)
    euclid_sq = euclid_norm_sq_exact(c)
    spectral_num = to_float(spectral)
    euclid_num = math.sqrt(to_float(euclid_sq))
    lam_max = max(abs(v) for v in eigenvalues_numeric(c))

    sq = spectral * spectral
    chain_exact_ok = sq <= euclid_sq <= c.n * sq
    if spectral == 0:
        perron_ok = lam_max <= EIGENVALUE_RTOL
    else:
        perron_ok = abs(lam_max - spectral_num) <= EIGENVALUE_RTOL * spectral_num
    if kind == "C1":
        closed_form_ok = spectral == c1_spectral_closed_form(c.n)
    else:
        closed_form_ok = spectral == c2_spectral_closed_form(c.n, r)

    return NormResult(
        n=c.n,
        kind=kind,
        r=r,
        spectral_exact=spectral,
        euclid_sq_exact=euclid_sq,
        spectral_numeric=spectral_num,
        euclid_numeric=euclid_num,
        lambda_max_numeric=lam_max,
        chain_exact_ok=chain_exact_ok,
        perron_ok=perron_ok,
        closed_form_ok=closed_form_ok,
    )
