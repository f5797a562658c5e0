"""Exact rational arithmetic for harmonic and hyperharmonic Fibonacci
numbers, a registry of mechanically verified identities, and exact/numeric
norms of the circulant matrices these sequences generate."""

from .exact_math import (
    Rational,
    binomial,
    decimal_string,
    factorial,
    falling_power,
    format_rational,
    parse_rational,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
    stirling1_unsigned,
    to_float,
)
from .sequences import (
    HyperTable,
    SequenceCache,
    fibonacci,
    harmonic,
    hyperfibonacci,
    hyperharmonic,
    hyperharmonic_closed,
    lucas,
    zeta_f1_partial,
)
from .fib_harmonic import (
    HyperFibMatrix,
    UpperShiftMatrix,
    build_hyperfib_matrix,
    build_upper_shift,
    fib_harmonic,
    hyper_fib_harmonic,
    hyper_fib_harmonic_closed,
    mat_mul,
    order_composition,
    shifted_hyper_identity,
)
from .circulant import (
    Circulant,
    NormResult,
    build_c1,
    build_c2,
    c1_euclid_sq_closed_form,
    c1_spectral_closed_form,
    c2_spectral_closed_form,
    eigenvalues_numeric,
    euclid_norm_sq_exact,
    norm_report,
    spectral_norm_exact,
)
from .identities import (
    Identity,
    InvalidOverrideError,
    ParamSpec,
    UnknownIdentityError,
    VerificationReport,
    registry,
    registry_keys,
    verify,
    verify_all,
)

__version__ = "0.1.0"
