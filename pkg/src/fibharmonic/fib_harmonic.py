"""Harmonic and hyperharmonic Fibonacci numbers, and the companion matrices
used for the composition identity between orders.

The central object is a two-parameter table: order 0 is the reciprocal
Fibonacci sequence 1/F(n) (with the n = 0 entry fixed at 0 for every order,
since 1/F(0) is undefined), and each order r >= 1 is the running prefix sum
of order r-1. Order 1 gives the harmonic Fibonacci numbers FH(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_math import binomial
from .sequences import HyperTable, fibonacci

_table = HyperTable(lambda n: Fraction(1, fibonacci(n)) if n else Fraction(0))


def fib_harmonic(n: int) -> Fraction:
    """FH(n): the sum of reciprocals of the first n Fibonacci numbers."""
    if n < 0:
        raise ValueError("fib_harmonic requires n >= 0")
    return _table.value(1, n)


def hyper_fib_harmonic(n: int, r: int) -> Fraction:
    """FH(n; r): order-r hyperharmonic Fibonacci number by the prefix-sum
    recurrence; order 0 is 1/F(n) for n >= 1, and FH(0; r) = 0 for all r."""
    if n < 0 or r < 0:
        raise ValueError("hyper_fib_harmonic requires n >= 0 and r >= 0")
    return _table.value(r, n)


def hyper_fib_harmonic_closed(n: int, r: int) -> Fraction:
    """Binomial-weighted closed form sum_{k=1..n} C(n-k+r-1, r-1) / F(k).

    Independent of the prefix-sum table; requires r >= 1 (the binomial
    weight has lower index r-1).
    """
    if n < 0:
        raise ValueError("hyper_fib_harmonic_closed requires n >= 0")
    if r < 1:
        raise ValueError("hyper_fib_harmonic_closed requires r >= 1")
    total = Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(binomial(n - k + r - 1, r - 1), fibonacci(k))
    return total


def shifted_hyper_identity(n: int, i: int, j: int) -> tuple[Fraction, Fraction]:
    """Both sides of the shifted closed form for 1 <= i <= n, j >= 1:

    lhs = FH(n-i+1; j),  rhs = sum_{k=i..n} C(n-k+j-1, j-1) / F(k-i+1).

    The pair is returned rather than a boolean so a failed comparison can
    report both values.
    """
    if not 1 <= i <= n:
        raise ValueError("shifted_hyper_identity requires 1 <= i <= n")
    if j < 1:
        raise ValueError("shifted_hyper_identity requires j >= 1")
    lhs = hyper_fib_harmonic(n - i + 1, j)
    rhs = Fraction(0)
    for k in range(i, n + 1):
        rhs += Fraction(binomial(n - k + j - 1, j - 1), fibonacci(k - i + 1))
    return lhs, rhs


def order_composition(n: int, r: int, s: int) -> tuple[Fraction, Fraction]:
    """Both sides of the order-composition identity for n, r >= 1 and s >= 0:

    lhs = FH(n; r+s),  rhs = sum_{t=1..n} C(n-t+r-1, r-1) * FH(t; s).
    """
    if n < 1:
        raise ValueError("order_composition requires n >= 1")
    if r < 1:
        raise ValueError("order_composition requires r >= 1")
    if s < 0:
        raise ValueError("order_composition requires s >= 0")
    lhs = hyper_fib_harmonic(n, r + s)
    rhs = Fraction(0)
    for t in range(1, n + 1):
        rhs += binomial(n - t + r - 1, r - 1) * hyper_fib_harmonic(t, s)
    return lhs, rhs


@dataclass(frozen=True)
class UpperShiftMatrix:
    """r-th power of the n x n upper-triangular all-ones matrix.

    Entry (i, j), 1-indexed, is C(j-i+r-1, r-1) when i <= j and 0 below the
    diagonal; power 1 recovers the all-ones upper triangle.
    """

    n: int
    r: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HyperFibMatrix:
    """n x n grid whose (i, j) entry, 1-indexed, is FH(n-i+1; r+j-1); the
    first column read bottom-to-top is FH(1; r) .. FH(n; r)."""

    n: int
    r: int
    entries: tuple[tuple[Fraction, ...], ...]


def build_upper_shift(n: int, r: int) -> UpperShiftMatrix:
    if n < 1 or r < 1:
        raise ValueError("build_upper_shift requires n >= 1 and r >= 1")
    entries = tuple(
        tuple(binomial(j - i + r - 1, r - 1) if i <= j else 0 for j in range(n))
        for i in range(n)
    )
    return UpperShiftMatrix(n, r, entries)


def build_hyperfib_matrix(n: int, r: int) -> HyperFibMatrix:
    if n < 1 or r < 1:
        raise ValueError("build_hyperfib_matrix requires n >= 1 and r >= 1")
    entries = tuple(
        tuple(hyper_fib_harmonic(n - i, r + j) for j in range(n))
        for i in range(n)
    )
    return HyperFibMatrix(n, r, entries)


def mat_mul(a, b):
    """Exact product of two square grids given as tuples of rows."""
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
