from fractions import Fraction

import pytest

from fibharmonic.fib_harmonic import (
    build_hyperfib_matrix,
    build_upper_shift,
    fib_harmonic,
    hyper_fib_harmonic,
    hyper_fib_harmonic_closed,
    mat_mul,
    order_composition,
    shifted_hyper_identity,
)
from fibharmonic.sequences import fibonacci

# the full published 4x5 grid of values: TABLE1[r][n]
TABLE1 = {
    1: {1: Fraction(1), 2: Fraction(2), 3: Fraction(5, 2), 4: Fraction(17, 6), 5: Fraction(91, 30)},
    2: {1: Fraction(1), 2: Fraction(3), 3: Fraction(11, 2), 4: Fraction(25, 3), 5: Fraction(341, 30)},
    3: {1: Fraction(1), 2: Fraction(4), 3: Fraction(19, 2), 4: Fraction(107, 6), 5: Fraction(146, 5)},
    4: {1: Fraction(1), 2: Fraction(5), 3: Fraction(29, 2), 4: Fraction(97, 3), 5: Fraction(923, 15)},
}


# ---------------------------------------------------------------------------
# harmonic Fibonacci numbers
# ---------------------------------------------------------------------------

def test_fib_harmonic_values():
    assert fib_harmonic(0) == 0
    assert fib_harmonic(3) == Fraction(5, 2)
    assert fib_harmonic(4) == Fraction(17, 6)


def test_fib_harmonic_is_literal_reciprocal_sum():
    for n in range(1, 50):
        direct = sum(Fraction(1, fibonacci(k)) for k in range(1, n + 1))
        assert fib_harmonic(n) == direct


def test_fib_harmonic_rejects_negative():
    with pytest.raises(ValueError):
        fib_harmonic(-1)


# ---------------------------------------------------------------------------
# hyperharmonic Fibonacci numbers
# ---------------------------------------------------------------------------

def test_reference_grid_reproduction():
    for r, row in TABLE1.items():
        for n, expected in row.items():
            assert hyper_fib_harmonic(n, r) == expected


def test_hyper_fib_harmonic_spot_values():
    assert hyper_fib_harmonic(5, 4) == Fraction(923, 15)
    assert hyper_fib_harmonic(3, 2) == Fraction(11, 2)


def test_order_one_is_fib_harmonic():
    for n in range(31):
        assert hyper_fib_harmonic(n, 1) == fib_harmonic(n)


def test_zero_index_and_order_conventions():
    assert hyper_fib_harmonic(0, 0) == 0  # not an error
    for r in range(0, 7):
        assert hyper_fib_harmonic(0, r) == 0
    for n in range(1, 10):
        assert hyper_fib_harmonic(n, 0) == Fraction(1, fibonacci(n))


def test_hyper_fib_harmonic_rejects_negative():
    with pytest.raises(ValueError):
        hyper_fib_harmonic(-1, 1)
    with pytest.raises(ValueError):
        hyper_fib_harmonic(1, -1)


def test_two_neighbor_recurrence():
    for n in range(1, 61):
        for r in range(1, 7):
            assert hyper_fib_harmonic(n, r) == hyper_fib_harmonic(n, r - 1) + hyper_fib_harmonic(n - 1, r)


# ---------------------------------------------------------------------------
# closed form
# ---------------------------------------------------------------------------

def test_closed_form_values():
    assert hyper_fib_harmonic_closed(2, 3) == 4
    assert hyper_fib_harmonic_closed(5, 2) == Fraction(341, 30)
    for r in range(1, 7):
        assert hyper_fib_harmonic_closed(1, r) == 1


def test_closed_form_matches_recurrence():
    for n in range(61):
        for r in range(1, 7):
            assert hyper_fib_harmonic_closed(n, r) == hyper_fib_harmonic(n, r)


def test_closed_form_rejects_order_zero():
    with pytest.raises(ValueError):
        hyper_fib_harmonic_closed(3, 0)


# ---------------------------------------------------------------------------
# shifted identity / order composition
# ---------------------------------------------------------------------------

def test_shifted_identity_examples():
    lhs, rhs = shifted_hyper_identity(3, 2, 2)
    assert lhs == rhs == 3
    lhs, rhs = shifted_hyper_identity(5, 1, 3)
    assert lhs == rhs == Fraction(146, 5)
    for k in range(1, 9):
        lhs, rhs = shifted_hyper_identity(k, k, 1)
        assert lhs == rhs == 1


def test_shifted_identity_grid():
    for n in range(1, 16):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs, rhs = shifted_hyper_identity(n, i, j)
                assert lhs == rhs


def test_shifted_identity_rejects_bad_indices():
    with pytest.raises(ValueError):
        shifted_hyper_identity(3, 0, 1)
    with pytest.raises(ValueError):
        shifted_hyper_identity(3, 4, 1)
    with pytest.raises(ValueError):
        shifted_hyper_identity(3, 1, 0)


def test_order_composition_examples():
    lhs, rhs = order_composition(3, 1, 1)
    assert lhs == rhs == Fraction(11, 2)
    lhs, rhs = order_composition(4, 2, 2)
    assert lhs == rhs == Fraction(97, 3)
    for r in range(1, 5):
        for s in range(1, 5):
            lhs, rhs = order_composition(1, r, s)
            assert lhs == rhs == 1


def test_order_composition_with_zero_s():
    for n in range(1, 20):
        lhs, rhs = order_composition(n, 2, 0)
        assert lhs == rhs


def test_order_composition_rejects_bad_orders():
    with pytest.raises(ValueError):
        order_composition(3, 0, 1)
    with pytest.raises(ValueError):
        order_composition(3, 1, -1)
    with pytest.raises(ValueError):
        order_composition(0, 1, 1)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def test_upper_shift_power_one_is_all_ones_triangle():
    a = build_upper_shift(3, 1)
    assert a.entries == ((1, 1, 1), (0, 1, 1), (0, 0, 1))


def test_upper_shift_diagonal_is_ones():
    for n in (1, 4, 9):
        for r in (1, 3, 5):
            m = build_upper_shift(n, r)
            assert all(m.entries[i][i] == 1 for i in range(n))


def test_upper_shift_entry_from_explicit_cube():
    a = build_upper_shift(4, 1).entries
    cubed = mat_mul(a, mat_mul(a, a))
    assert cubed[0][2] == 6
    assert build_upper_shift(4, 3).entries == cubed


def test_upper_shift_matches_matrix_powers():
    for n in range(1, 16):
        a = build_upper_shift(n, 1).entries
        power = a
        for r in range(1, 6):
            assert build_upper_shift(n, r).entries == power
            power = mat_mul(power, a)


def test_upper_shift_rejects_bad_sizes():
    with pytest.raises(ValueError):
        build_upper_shift(0, 1)
    with pytest.raises(ValueError):
        build_upper_shift(3, 0)


def test_hyperfib_matrix_small():
    m = build_hyperfib_matrix(2, 1)
    assert m.entries == ((Fraction(2), Fraction(3)), (Fraction(1), Fraction(1)))


def test_hyperfib_matrix_structure():
    n, r = 5, 2
    m = build_hyperfib_matrix(n, r)
    assert m.entries[0][0] == hyper_fib_harmonic(n, r)
    # bottom row is all index-1 values, i.e. all ones
    assert all(m.entries[n - 1][j] == 1 for j in range(n))
    # first column read bottom-to-top is FH(1;r) .. FH(n;r)
    column = [m.entries[n - 1 - i][0] for i in range(n)]
    assert column == [hyper_fib_harmonic(k, r) for k in range(1, n + 1)]


def test_matrix_composition_identity():
    for n, r, s in [(3, 1, 1), (4, 2, 1), (5, 1, 3), (8, 2, 2)]:
        lhs = build_hyperfib_matrix(n, r + s).entries
        rhs = mat_mul(build_upper_shift(n, r).entries, build_hyperfib_matrix(n, s).entries)
        assert lhs == rhs


def test_hyperfib_matrix_rejects_bad_sizes():
    with pytest.raises(ValueError):
        build_hyperfib_matrix(0, 1)
    with pytest.raises(ValueError):
        build_hyperfib_matrix(2, 0)
