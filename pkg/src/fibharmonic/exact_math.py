"""Exact arithmetic substrate: canonical rationals, binomial coefficients,
falling powers, factorials, and unsigned Stirling numbers of the first kind.

Rational values are ``fractions.Fraction`` throughout: arbitrary-precision
integer numerator and denominator, always reduced to lowest terms with a
positive denominator. The text interchange form is ``"p/q"`` in lowest terms
(or just ``"p"`` when the denominator is 1); :func:`format_rational` and
:func:`parse_rational` round-trip it bit-exactly no matter how large the
integers grow.
"""

from __future__ import annotations

import math
import sys
import threading
from fractions import Fraction

Rational = Fraction

_text_lock = threading.Lock()


def _accommodate_digits(estimate: int) -> None:
    # CPython >= 3.10.7 guards int<->str conversion at 4300 digits; exact
    # values here legitimately exceed that, so raise the cap when needed.
    try:
        limit = sys.get_int_max_str_digits()
    except AttributeError:
        return
    if limit == 0 or estimate < limit:
        return
    with _text_lock:
        current = sys.get_int_max_str_digits()
        if current != 0 and estimate >= current:
            sys.set_int_max_str_digits(estimate + 4300)


# ---------------------------------------------------------------------------
# rational arithmetic and text forms
# ---------------------------------------------------------------------------

def rat_add(a: Rational, b: Rational) -> Rational:
    return a + b


def rat_sub(a: Rational, b: Rational) -> Rational:
    return a - b


def rat_mul(a: Rational, b: Rational) -> Rational:
    return a * b


def rat_div(a: Rational, b: Rational) -> Rational:
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return a / b


def format_rational(value: Rational) -> str:
    """Render a rational in the interchange form "p/q" (or "p" when q = 1)."""
    estimate = (value.numerator.bit_length() + value.denominator.bit_length()) // 3 + 4
    _accommodate_digits(estimate)
    return str(Fraction(value))


def parse_rational(text: str) -> Rational:
    """Parse the "p/q" interchange form back into a canonical rational."""
    _accommodate_digits(len(text))
    return Fraction(text.strip())


def to_float(value: Rational) -> float:
    """Nearest double for an exact rational of any magnitude.

    Arbitrary-precision integer division is correctly rounded in CPython, so
    this stays within half an ulp even when numerator and denominator have
    thousands of digits.
    """
    return value.numerator / value.denominator


def decimal_string(value: Rational, digits: int) -> str:
    """Decimal expansion of ``value`` truncated (never rounded) to ``digits``
    places, computed by exact integer long division."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    sign = "-" if value < 0 else ""
    p, q = abs(value.numerator), value.denominator
    whole, rem = divmod(p, q)
    if digits == 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // q
    return f"{sign}{whole}.{frac:0{digits}d}"


# ---------------------------------------------------------------------------
# combinatorial integers
# ---------------------------------------------------------------------------

def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; 0 outside 0 <= k <= n. Negative n is rejected
    rather than extended by upper negation."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_power(x: int, m: int) -> int:
    """x(x-1)...(x-m+1), the empty product 1 when m = 0.

    A zero factor appears naturally when 0 <= x < m, so the result is 0
    there; no special-casing.
    """
    if m < 0:
        raise ValueError("falling_power requires m >= 0")
    out = 1
    for i in range(m):
        out *= x - i
    return out


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial requires n >= 0")
    return math.factorial(n)


_stirling_lock = threading.Lock()
_stirling_rows: list[list[int]] = [[1]]  # row n holds [n,0] .. [n,n]


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind |s(n, k)|.

    Counts permutations of n elements with exactly k disjoint cycles.
    Computed by the triangle recurrence s(n+1, k) = n*s(n, k) + s(n, k-1)
    with s(0, 0) = 1; rows are cached and grown on demand.
    """
    if n < 0 or k < 0:
        raise ValueError("stirling1_unsigned requires n, k >= 0")
    if k > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while n >= len(_stirling_rows):
                m = len(_stirling_rows) - 1
                prev = _stirling_rows[m]
                row = [0] * (m + 2)
                for j in range(1, m + 2):
                    above = prev[j] if j <= m else 0
                    row[j] = m * above + prev[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][k]
