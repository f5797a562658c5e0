"""Finite difference calculus over exact rationals: the forward difference
operator, falling-power anti-differences, and summation by parts.

The definite sum convention is sum_{x=a}^{b-1} g(x), so that an
anti-difference f of g (meaning delta f = g) gives f(b) - f(a); summation by
parts then reads, over the same range,

    sum u(x) * delta v(x)  =  u(b)v(b) - u(a)v(a)  -  sum v(x+1) * delta u(x).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .exact_math import falling_power

Func = Callable[[int], Fraction]


def delta(f: Func, x: int) -> Fraction:
    """Forward difference (delta f)(x) = f(x+1) - f(x)."""
    return f(x + 1) - f(x)


def definite_sum(g: Func, a: int, b: int) -> Fraction:
    """sum_{x=a}^{b-1} g(x); zero when b <= a."""
    total = Fraction(0)
    for x in range(a, b):
        total += g(x)
    return total


def falling_antidifference(x: int, m: int) -> Fraction:
    """The anti-difference of x^(m falling) for m >= 0, namely
    x^(m+1 falling) / (m+1); its difference recovers the falling power."""
    if m < 0:
        raise ValueError("falling_antidifference requires m >= 0")
    return Fraction(falling_power(x, m + 1), m + 1)


def summation_by_parts_sides(u: Func, v: Func, a: int, b: int) -> tuple[Fraction, Fraction]:
    """Both sides of summation by parts over x in [a, b).

    lhs = sum u(x) (v(x+1) - v(x)); rhs moves the difference onto u with the
    boundary term u(b)v(b) - u(a)v(a). Returned as a pair so callers can
    assert exact equality and report both values on a mismatch.
    """
    if b < a:
        raise ValueError("summation_by_parts_sides requires b >= a")
    lhs = definite_sum(lambda x: u(x) * (v(x + 1) - v(x)), a, b)
    rhs = u(b) * v(b) - u(a) * v(a) - definite_sum(lambda x: v(x + 1) * (u(x + 1) - u(x)), a, b)
    return lhs, rhs
