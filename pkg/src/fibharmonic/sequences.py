"""Classical sequence generators: Fibonacci and Lucas numbers with signed
indices, harmonic numbers, and the "hyper" families obtained by repeated
prefix summation (hyperharmonic numbers, hyperfibonacci numbers), plus the
partial sums of reciprocal Fibonacci numbers used in the convergence report.

Conventions adopted here and documented once:

* the order-0 hyperharmonic base value at n = 0 is taken to be 0 (the base
  sequence 1/n is otherwise undefined there), so every table row starts at 0;
* all caches grow monotonically under a lock and hand out immutable values,
  so concurrent readers never observe a partially-computed entry.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable

from .exact_math import binomial


class SequenceCache:
    """Growable cache for a two-term recurrence a(n+2) = a(n+1) + a(n),
    extended to negative indices by running the recurrence backwards:
    a(n-2) = a(n) - a(n-1)."""

    def __init__(self, a0: int, a1: int):
        self._pos = [a0, a1]
        self._neg = [a0]  # _neg[k] == a(-k)
        self._lock = threading.Lock()

    def value(self, n: int) -> int:
        if n >= 0:
            if n >= len(self._pos):
                with self._lock:
                    while n >= len(self._pos):
                        self._pos.append(self._pos[-1] + self._pos[-2])
            return self._pos[n]
        k = -n
        if k >= len(self._neg):
            with self._lock:

                def at(idx: int) -> int:
                    return self._pos[idx] if idx >= 0 else self._neg[-idx]

                while k >= len(self._neg):
                    j = len(self._neg)
                    self._neg.append(at(-j + 2) - at(-j + 1))
        return self._neg[k]


class _PrefixCache:
    """S(0) = 0 and S(n) = S(n-1) + term(n): growable exact prefix sums."""

    def __init__(self, term: Callable[[int], Fraction]):
        self._term = term
        self._values = [Fraction(0)]
        self._lock = threading.Lock()

    def value(self, n: int) -> Fraction:
        if n >= len(self._values):
            with self._lock:
                while n >= len(self._values):
                    k = len(self._values)
                    self._values.append(self._values[-1] + self._term(k))
        return self._values[n]


class HyperTable:
    """Two-parameter prefix-sum table T(r, n).

    Row 0 is the base sequence (whose value at index 0 must be 0); every row
    r >= 1 is the running prefix sum of row r-1 over indices 1..n, i.e.
    T(r, 0) = 0 and T(r, n) = T(r, n-1) + T(r-1, n). Rows are computed
    eagerly up to the requested index and never mutated afterwards.
    """

    def __init__(self, base: Callable[[int], Fraction]):
        self._base = base
        self._rows: list[list] = [[base(0)]]
        self._lock = threading.Lock()

    def value(self, r: int, n: int):
        if r < 0 or n < 0:
            raise ValueError("order and index must be nonnegative")
        rows = self._rows
        if r < len(rows) and n < len(rows[r]):
            return rows[r][n]
        with self._lock:
            zero = rows[0][0]
            while len(rows) <= r:
                rows.append([zero])
            row0 = rows[0]
            while len(row0) <= n:
                row0.append(self._base(len(row0)))
            for order in range(1, r + 1):
                prev, cur = rows[order - 1], rows[order]
                while len(cur) <= n:
                    cur.append(cur[-1] + prev[len(cur)])
            return rows[r][n]


_fib = SequenceCache(0, 1)
_lucas = SequenceCache(2, 1)


def fibonacci(n: int) -> int:
    """F(n) for any signed n; F(0) = 0, F(1) = 1, F(-1) = 1, F(-2) = -1."""
    return _fib.value(n)


def lucas(n: int) -> int:
    """L(n) for any signed n; L(0) = 2, L(1) = 1, L(-1) = -1."""
    return _lucas.value(n)


_harmonic = _PrefixCache(lambda k: Fraction(1, k))


def harmonic(n: int) -> Fraction:
    """H(n) = 1 + 1/2 + ... + 1/n exactly, with H(0) = 0."""
    if n < 0:
        raise ValueError("harmonic requires n >= 0")
    return _harmonic.value(n)


_hyperharmonic = HyperTable(lambda n: Fraction(1, n) if n else Fraction(0))


def hyperharmonic(n: int, r: int) -> Fraction:
    """Order-r hyperharmonic number by the prefix-sum recurrence.

    Order 0 is the base sequence 1/n (0 at n = 0 by convention), order 1 is
    the ordinary harmonic number, and each higher order sums the previous
    one over 1..n.
    """
    if n < 0 or r < 0:
        raise ValueError("hyperharmonic requires n >= 0 and r >= 0")
    return _hyperharmonic.value(r, n)


def hyperharmonic_closed(n: int, r: int) -> Fraction:
    """Binomial closed form C(n+r-1, r-1) * (H(n+r-1) - H(r-1)) for r >= 1.

    An independent evaluation path: it never touches the prefix-sum table,
    which is what makes it useful as a cross-check.
    """
    if n < 0:
        raise ValueError("hyperharmonic_closed requires n >= 0")
    if r < 1:
        raise ValueError("hyperharmonic_closed requires r >= 1")
    return binomial(n + r - 1, r - 1) * (harmonic(n + r - 1) - harmonic(r - 1))


_hyperfib = HyperTable(lambda n: _fib.value(n))


def hyperfibonacci(n: int, r: int) -> int:
    """Order-r hyperfibonacci number: r-fold repeated prefix sum of the
    Fibonacci sequence; order 0 is F(n) itself."""
    if n < 0 or r < 0:
        raise ValueError("hyperfibonacci requires n >= 0 and r >= 0")
    return _hyperfib.value(r, n)


_recip_fib = _PrefixCache(lambda k: Fraction(1, _fib.value(k)))


def zeta_f1_partial(n: int) -> Fraction:
    """Partial sum 1/F(1) + ... + 1/F(n) of the reciprocal Fibonacci series."""
    if n < 1:
        raise ValueError("zeta_f1_partial requires n >= 1")
    return _recip_fib.value(n)
