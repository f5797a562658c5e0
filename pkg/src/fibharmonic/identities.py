"""Registry of exactly-verifiable identities and the grid verifier.

Each identity pairs two independently-computed evaluators (lhs, rhs) over a
declared integer parameter domain. Verification is exact: both sides are
canonical rationals and "equal" means Fraction equality, never a tolerance.
The two sides share nothing but the base sequence caches (Fibonacci, Lucas,
harmonic, and the hyper prefix-sum tables); in particular every summation is
accumulated separately per side.

Registry keys are stable identifiers grouped by family:

* ``BG-*`` background identities for harmonic and hyperharmonic numbers,
* ``FH-*`` partial-sum identities for harmonic Fibonacci numbers,
* ``HH-*`` hyperharmonic Fibonacci identities, including the entrywise
  matrix composition ``HH-T35M``.

Formula strings use the notation: H(n) harmonic, H(n;r) hyperharmonic of
order r, FH(n) harmonic Fibonacci, FH(n;r) its order-r analogue, F(n)
Fibonacci, L(n) Lucas, C(n,k) binomial, s1(n,k) unsigned Stirling of the
first kind, ff(x,m) the falling power x(x-1)...(x-m+1).
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from .exact_math import (
    binomial,
    factorial,
    falling_power,
    format_rational,
    stirling1_unsigned,
)
from .fib_harmonic import (
    build_hyperfib_matrix,
    build_upper_shift,
    fib_harmonic,
    hyper_fib_harmonic,
    hyper_fib_harmonic_closed,
    mat_mul,
)
from .sequences import (
    fibonacci,
    harmonic,
    hyperharmonic,
    hyperharmonic_closed,
    lucas,
)

Env = Mapping[str, int]
Evaluator = Callable[[Env], Fraction]

SCALE_N_CAP = {"small": 20, "default": 100, "large": 300}
AUX_CAP = 6


class UnknownIdentityError(LookupError):
    """Raised when a registry key does not exist."""


class InvalidOverrideError(ValueError):
    """Raised when a parameter override violates an identity's domain."""


@dataclass(frozen=True)
class ParamSpec:
    """One grid parameter: an inclusive integer range plus domain rules.

    ``lo`` is a hard precondition (overrides may not go below it). ``scaled``
    marks the primary index that verify_all presets re-cap per scale; ``aux``
    marks auxiliary parameters capped at AUX_CAP in presets. ``bound_by``
    names an earlier parameter whose current value (plus ``bound_offset``)
    also upper-bounds this one, e.g. i <= n or m <= r-1.
    """

    name: str
    lo: int
    hi: int
    scaled: bool = False
    aux: bool = False
    bound_by: str | None = None
    bound_offset: int = 0


@dataclass(frozen=True)
class Identity:
    key: str
    description: str
    formula: str
    params: tuple[ParamSpec, ...]
    lhs: Evaluator
    rhs: Evaluator


@dataclass(frozen=True)
class Failure:
    params: dict[str, int]
    lhs: Fraction
    rhs: Fraction


@dataclass
class VerificationReport:
    key: str
    grid_size: int
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "id": self.key,
            "grid_size": self.grid_size,
            "failures": [
                {
                    "params": dict(f.params),
                    "lhs": format_rational(f.lhs),
                    "rhs": format_rational(f.rhs),
                }
                for f in self.failures
            ],
            "elapsed_ms": self.elapsed_ms,
        }


class _PrefixSum:
    """Incrementally memoized sum of term(k) over k in [start, n)."""

    def __init__(self, term: Callable[[int], Fraction], start: int = 0):
        self._term = term
        self._start = start
        self._partial = [Fraction(0)]

    def upto(self, n: int) -> Fraction:
        while len(self._partial) <= n - self._start:
            k = self._start + len(self._partial) - 1
            self._partial.append(self._partial[-1] + self._term(k))
        return self._partial[n - self._start]


class _KeyedPrefixSum:
    """A family of prefix sums indexed by an auxiliary parameter value."""

    def __init__(self, term_factory: Callable[[int], Callable[[int], Fraction]], start: int = 0):
        self._factory = term_factory
        self._start = start
        self._sums: dict[int, _PrefixSum] = {}

    def upto(self, key: int, n: int) -> Fraction:
        ps = self._sums.get(key)
        if ps is None:
            ps = self._sums[key] = _PrefixSum(self._factory(key), self._start)
        return ps.upto(n)


def registry() -> list[Identity]:
    """Build the full identity registry.

    Evaluator-side memoization is created fresh per call, so long-lived
    processes can drop the caches by rebuilding the registry.
    """
    out: list[Identity] = []

    def add(key, description, formula, params, lhs, rhs):
        out.append(Identity(key, description, formula, tuple(params), lhs, rhs))

    n_300 = ParamSpec("n", 1, 300, scaled=True)
    n_200 = ParamSpec("n", 1, 200, scaled=True)
    r_aux = ParamSpec("r", 1, 6, aux=True)
    m_aux = ParamSpec("m", 0, 6, aux=True)

    # -- background: harmonic numbers ------------------------------------

    h1_lhs = _PrefixSum(lambda k: harmonic(k), start=1)
    add(
        "BG-H1",
        "partial sums of harmonic numbers",
        "sum_{k=1}^{n-1} H(k) = n*H(n) - n",
        [n_300],
        lambda e: h1_lhs.upto(e["n"]),
        lambda e: e["n"] * harmonic(e["n"]) - e["n"],
    )

    h2_lhs = _KeyedPrefixSum(lambda m: (lambda k: binomial(k, m) * harmonic(k)), start=1)
    add(
        "BG-H2",
        "binomial-weighted partial sums of harmonic numbers",
        "sum_{k=1}^{n-1} C(k,m)*H(k) = C(n,m+1)*(H(n) - 1/(m+1))",
        [n_300, m_aux],
        lambda e: h2_lhs.upto(e["m"], e["n"]),
        lambda e: binomial(e["n"], e["m"] + 1) * (harmonic(e["n"]) - Fraction(1, e["m"] + 1)),
    )

    h3_lhs = _PrefixSum(lambda k: k * harmonic(k), start=1)
    add(
        "BG-H3",
        "index-weighted partial sums of harmonic numbers",
        "sum_{k=1}^{n-1} k*H(k) = (ff(n,2)/2)*(H(n) - 1/2)",
        [n_300],
        lambda e: h3_lhs.upto(e["n"]),
        lambda e: Fraction(falling_power(e["n"], 2), 2) * (harmonic(e["n"]) - Fraction(1, 2)),
    )

    sp1_dyadic = _PrefixSum(lambda k: Fraction(1, k * 2**k), start=1)
    add(
        "BG-SP1",
        "binomial transform of harmonic numbers",
        "sum_{k=0}^{n} C(n,k)*H(k) = 2^n*(H(n) - sum_{k=1}^{n} 1/(k*2^k))",
        [n_300],
        lambda e: sum((binomial(e["n"], k) * harmonic(k) for k in range(e["n"] + 1)), Fraction(0)),
        lambda e: 2 ** e["n"] * (harmonic(e["n"]) - sp1_dyadic.upto(e["n"] + 1)),
    )

    add(
        "BG-SP2",
        "alternating binomial transform of harmonic numbers",
        "sum_{k=0}^{n} C(n,k)*(-1)^k*H(k) = -1/n",
        [n_300],
        lambda e: sum(
            ((-1) ** k * binomial(e["n"], k) * harmonic(k) for k in range(e["n"] + 1)),
            Fraction(0),
        ),
        lambda e: Fraction(-1, e["n"]),
    )

    # -- background: hyperharmonic numbers --------------------------------

    add(
        "BG-HH1",
        "hyperharmonic numbers as binomial-weighted reciprocal sums",
        "H(n;r) = sum_{t=1}^{n} C(n+r-t-1, r-1) / t",
        [n_300, r_aux],
        lambda e: hyperharmonic(e["n"], e["r"]),
        lambda e: sum(
            (
                Fraction(binomial(e["n"] + e["r"] - t - 1, e["r"] - 1), t)
                for t in range(1, e["n"] + 1)
            ),
            Fraction(0),
        ),
    )

    add(
        "BG-HH2",
        "hyperharmonic numbers from any lower order",
        "H(n;r) = sum_{t=1}^{n} C(n+r-m-t-1, r-m-1) * H(t;m)  for 0 <= m <= r-1",
        [n_300, r_aux, ParamSpec("m", 0, 6, aux=True, bound_by="r", bound_offset=-1)],
        lambda e: hyperharmonic(e["n"], e["r"]),
        lambda e: sum(
            (
                binomial(e["n"] + e["r"] - e["m"] - t - 1, e["r"] - e["m"] - 1)
                * hyperharmonic(t, e["m"])
                for t in range(1, e["n"] + 1)
            ),
            Fraction(0),
        ),
    )

    add(
        "BG-HHC",
        "hyperharmonic closed form against the recurrence",
        "H(n;r) = C(n+r-1, r-1) * (H(n+r-1) - H(r-1))",
        [n_300, r_aux],
        lambda e: hyperharmonic(e["n"], e["r"]),
        lambda e: hyperharmonic_closed(e["n"], e["r"]),
    )

    add(
        "BG-HSTIR",
        "harmonic numbers via Stirling numbers of the first kind",
        "H(n) = s1(n+1, 2) / n!",
        [n_300],
        lambda e: harmonic(e["n"]),
        lambda e: Fraction(stirling1_unsigned(e["n"] + 1, 2), factorial(e["n"])),
    )

    # -- harmonic Fibonacci partial-sum identities -------------------------

    t21_lhs = _PrefixSum(lambda k: fib_harmonic(k))
    t21_tail = _PrefixSum(lambda k: Fraction(k + 1, fibonacci(k + 1)))
    add(
        "FH-T21",
        "partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} FH(k) = n*FH(n) - sum_{k=0}^{n-1} (k+1)/F(k+1)",
        [n_200],
        lambda e: t21_lhs.upto(e["n"]),
        lambda e: e["n"] * fib_harmonic(e["n"]) - t21_tail.upto(e["n"]),
    )

    t22_lhs = _PrefixSum(lambda k: fib_harmonic(k) ** 2)
    t22_tail = _PrefixSum(
        lambda k: Fraction(k + 1, fibonacci(k + 1))
        * (2 * fib_harmonic(k) + Fraction(1, fibonacci(k + 1)))
    )
    add(
        "FH-T22",
        "partial sums of squared harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} FH(k)^2 = n*FH(n)^2 - sum_{k=0}^{n-1} ((k+1)/F(k+1))*(2*FH(k) + 1/F(k+1))",
        [n_200],
        lambda e: t22_lhs.upto(e["n"]),
        lambda e: e["n"] * fib_harmonic(e["n"]) ** 2 - t22_tail.upto(e["n"]),
    )

    t23_lhs = _KeyedPrefixSum(lambda m: (lambda k: binomial(k, m) * fib_harmonic(k)))
    t23_tail = _KeyedPrefixSum(
        lambda m: (lambda k: Fraction(binomial(k + 1, m + 1), fibonacci(k + 1)))
    )
    add(
        "FH-T23",
        "binomial-weighted partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} C(k,m)*FH(k) = C(n,m+1)*FH(n) - sum_{k=0}^{n-1} C(k+1,m+1)/F(k+1)",
        [n_200, m_aux],
        lambda e: t23_lhs.upto(e["m"], e["n"]),
        lambda e: binomial(e["n"], e["m"] + 1) * fib_harmonic(e["n"])
        - t23_tail.upto(e["m"], e["n"]),
    )

    t24_lhs = _KeyedPrefixSum(lambda m: (lambda k: falling_power(k, m) * fib_harmonic(k)))
    t24_tail = _KeyedPrefixSum(
        lambda m: (
            lambda k: Fraction(falling_power(k + 1, m + 1), m + 1)
            * Fraction(1, fibonacci(k + 1))
        )
    )
    add(
        "FH-T24",
        "falling-power-weighted partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} ff(k,m)*FH(k) = (ff(n,m+1)/(m+1))*FH(n) - sum_{k=0}^{n-1} (ff(k+1,m+1)/(m+1))/F(k+1)",
        [n_200, m_aux],
        lambda e: t24_lhs.upto(e["m"], e["n"]),
        lambda e: Fraction(falling_power(e["n"], e["m"] + 1), e["m"] + 1) * fib_harmonic(e["n"])
        - t24_tail.upto(e["m"], e["n"]),
    )

    t25_lhs = _PrefixSum(lambda k: fib_harmonic(k) * Fraction(1, k + 1))
    t25_tail = _PrefixSum(lambda k: harmonic(k + 1) * Fraction(1, fibonacci(k + 1)))
    add(
        "FH-T25",
        "harmonic-weighted partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} FH(k)/(k+1) = H(n)*FH(n) - sum_{k=0}^{n-1} H(k+1)/F(k+1)",
        [n_200],
        lambda e: t25_lhs.upto(e["n"]),
        lambda e: harmonic(e["n"]) * fib_harmonic(e["n"]) - t25_tail.upto(e["n"]),
    )

    c26_lhs = _PrefixSum(lambda k: fib_harmonic(k) * Fraction(1, k + 1))
    c26_tail = _PrefixSum(
        lambda k: Fraction(
            stirling1_unsigned(k + 2, 2), factorial(k + 1) * fibonacci(k + 1)
        )
    )
    add(
        "FH-C26",
        "Stirling form of the harmonic-weighted partial sums",
        "sum_{k=0}^{n-1} FH(k)/(k+1) = (s1(n+1,2)/n!)*FH(n) - sum_{k=0}^{n-1} s1(k+2,2)/((k+1)!*F(k+1))",
        [n_200],
        lambda e: c26_lhs.upto(e["n"]),
        lambda e: Fraction(stirling1_unsigned(e["n"] + 1, 2), factorial(e["n"]))
        * fib_harmonic(e["n"])
        - c26_tail.upto(e["n"]),
    )

    t27_lhs = _PrefixSum(lambda k: fibonacci(k - 1) * fib_harmonic(k))
    add(
        "FH-T27",
        "Fibonacci-weighted partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} F(k-1)*FH(k) = F(n)*FH(n) - n",
        [n_200],
        lambda e: t27_lhs.upto(e["n"]),
        lambda e: fibonacci(e["n"]) * fib_harmonic(e["n"]) - e["n"],
    )

    t28_lhs = _PrefixSum(lambda k: lucas(k - 1) * fib_harmonic(k))
    t28_tail = _PrefixSum(lambda k: Fraction(lucas(k + 1), fibonacci(k + 1)))
    add(
        "FH-T28",
        "Lucas-weighted partial sums of harmonic Fibonacci numbers",
        "sum_{k=0}^{n-1} L(k-1)*FH(k) = L(n)*FH(n) - sum_{k=0}^{n-1} L(k+1)/F(k+1)",
        [n_200],
        lambda e: t28_lhs.upto(e["n"]),
        lambda e: lucas(e["n"]) * fib_harmonic(e["n"]) - t28_tail.upto(e["n"]),
    )

    # -- hyperharmonic Fibonacci identities --------------------------------

    def closed_any(m: int, q: int) -> Fraction:
        # closed-form path for FH(m; q), valid down to order 0 and index 0
        if m == 0:
            return Fraction(0)
        if q == 0:
            return Fraction(1, fibonacci(m))
        return hyper_fib_harmonic_closed(m, q)

    add(
        "HH-L32",
        "two-neighbor recurrence of hyperharmonic Fibonacci numbers",
        "FH(n;r) = FH(n;r-1) + FH(n-1;r)",
        [ParamSpec("n", 1, 60, scaled=True), r_aux],
        lambda e: hyper_fib_harmonic(e["n"], e["r"]),
        # rhs goes through the closed form so the prefix-sum table (which is
        # filled by this very recurrence) cannot make the check circular
        lambda e: closed_any(e["n"], e["r"] - 1) + closed_any(e["n"] - 1, e["r"]),
    )

    add(
        "HH-C34",
        "hyperharmonic Fibonacci closed form against the recurrence",
        "FH(n;r) = sum_{k=1}^{n} C(n-k+r-1, r-1) / F(k)",
        [ParamSpec("n", 1, 60, scaled=True), r_aux],
        lambda e: hyper_fib_harmonic(e["n"], e["r"]),
        lambda e: hyper_fib_harmonic_closed(e["n"], e["r"]),
    )

    add(
        "HH-T33",
        "shifted closed form with offset start and arbitrary order",
        "FH(n-i+1;j) = sum_{k=i}^{n} C(n-k+j-1, j-1) / F(k-i+1)  for 1 <= i,j <= n",
        [
            ParamSpec("n", 1, 40, scaled=True),
            ParamSpec("i", 1, 40, aux=True, bound_by="n"),
            ParamSpec("j", 1, 40, aux=True, bound_by="n"),
        ],
        lambda e: hyper_fib_harmonic(e["n"] - e["i"] + 1, e["j"]),
        lambda e: sum(
            (
                Fraction(
                    binomial(e["n"] - k + e["j"] - 1, e["j"] - 1),
                    fibonacci(k - e["i"] + 1),
                )
                for k in range(e["i"], e["n"] + 1)
            ),
            Fraction(0),
        ),
    )

    add(
        "HH-T35",
        "composition of orders through a binomial convolution",
        "FH(n;r+s) = sum_{t=1}^{n} C(n-t+r-1, r-1) * FH(t;s)  for r >= 1, s >= 0",
        [ParamSpec("n", 1, 60, scaled=True), r_aux, ParamSpec("s", 0, 6, aux=True)],
        lambda e: hyper_fib_harmonic(e["n"], e["r"] + e["s"]),
        lambda e: sum(
            (
                binomial(e["n"] - t + e["r"] - 1, e["r"] - 1) * hyper_fib_harmonic(t, e["s"])
                for t in range(1, e["n"] + 1)
            ),
            Fraction(0),
        ),
    )

    @functools.lru_cache(maxsize=None)
    def _grid_matrix(n: int, order: int):
        return build_hyperfib_matrix(n, order).entries

    @functools.lru_cache(maxsize=None)
    def _shift_product(n: int, r: int, s: int):
        return mat_mul(build_upper_shift(n, r).entries, build_hyperfib_matrix(n, s).entries)

    add(
        "HH-T35M",
        "matrix form of the order composition, checked entrywise",
        "grid(n;r+s)[i,j] = (shift(n;r) * grid(n;s))[i,j]",
        [
            ParamSpec("n", 1, 25, scaled=True),
            ParamSpec("r", 1, 4, aux=True),
            ParamSpec("s", 1, 4, aux=True),
            ParamSpec("i", 1, 25, aux=True, bound_by="n"),
            ParamSpec("j", 1, 25, aux=True, bound_by="n"),
        ],
        lambda e: _grid_matrix(e["n"], e["r"] + e["s"])[e["i"] - 1][e["j"] - 1],
        lambda e: _shift_product(e["n"], e["r"], e["s"])[e["i"] - 1][e["j"] - 1],
    )

    return out


def registry_keys() -> list[str]:
    return [ident.key for ident in registry()]


def _lookup(idents: list[Identity], key: str) -> Identity:
    for ident in idents:
        if ident.key == key:
            return ident
    raise UnknownIdentityError(f"unknown identity {key!r}")


def _resolve_bounds(
    ident: Identity, overrides: Mapping[str, tuple[int, int]] | None
) -> dict[str, tuple[int, int]]:
    pending = dict(overrides or {})
    bounds: dict[str, tuple[int, int]] = {}
    for spec in ident.params:
        lo, hi = spec.lo, spec.hi
        if spec.name in pending:
            lo, hi = pending.pop(spec.name)
            if lo < spec.lo:
                raise InvalidOverrideError(
                    f"{ident.key} requires {spec.name} >= {spec.lo}, override asked for {lo}"
                )
            if hi < lo:
                raise InvalidOverrideError(
                    f"empty override range for {spec.name} in {ident.key}: ({lo}, {hi})"
                )
        bounds[spec.name] = (lo, hi)
    if pending:
        raise InvalidOverrideError(
            f"{ident.key} has no parameter named {sorted(pending)[0]!r}"
        )
    return bounds


def _iter_grid(
    params: tuple[ParamSpec, ...], bounds: Mapping[str, tuple[int, int]]
) -> Iterator[dict[str, int]]:
    # deterministic lexicographic order over the declared parameters
    env: dict[str, int] = {}

    def rec(idx: int) -> Iterator[dict[str, int]]:
        if idx == len(params):
            yield dict(env)
            return
        spec = params[idx]
        lo, hi = bounds[spec.name]
        if spec.bound_by is not None:
            hi = min(hi, env[spec.bound_by] + spec.bound_offset)
        for value in range(lo, hi + 1):
            env[spec.name] = value
            yield from rec(idx + 1)
        env.pop(spec.name, None)

    yield from rec(0)


def verify_identity(
    ident: Identity, overrides: Mapping[str, tuple[int, int]] | None = None
) -> VerificationReport:
    """Sweep the identity's parameter grid and report every exact mismatch."""
    bounds = _resolve_bounds(ident, overrides)
    start = time.perf_counter()
    failures: list[Failure] = []
    count = 0
    for env in _iter_grid(ident.params, bounds):
        count += 1
        left = ident.lhs(env)
        right = ident.rhs(env)
        if left != right:
            failures.append(Failure(env, left, right))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(ident.key, count, failures, elapsed_ms)


def verify(
    key: str, overrides: Mapping[str, tuple[int, int]] | None = None
) -> VerificationReport:
    """Verify one registry identity by key, optionally overriding parameter
    ranges with (lo, hi) pairs; ranges may not go below an identity's
    preconditions."""
    return verify_identity(_lookup(registry(), key), overrides)


def scale_overrides(ident: Identity, scale: str) -> dict[str, tuple[int, int]]:
    """Preset ranges for a scale: the primary index is capped at the scale
    cap (never above the identity's own domain) and auxiliary parameters at
    AUX_CAP; coupled bounds such as i <= n still apply during iteration."""
    n_cap = SCALE_N_CAP[scale]
    caps: dict[str, tuple[int, int]] = {}
    for spec in ident.params:
        if spec.scaled:
            caps[spec.name] = (spec.lo, min(spec.hi, n_cap))
        elif spec.aux:
            caps[spec.name] = (spec.lo, min(spec.hi, AUX_CAP))
    return caps


def verify_all(scale: str = "default") -> list[VerificationReport]:
    """Run every registry identity at the given preset scale; failures are
    data in the reports, never exceptions."""
    if scale not in SCALE_N_CAP:
        raise ValueError(f"scale must be one of {sorted(SCALE_N_CAP)}")
    reports = []
    for ident in registry():
        reports.append(verify_identity(ident, scale_overrides(ident, scale)))
    return reports
